/** Tiny dependency-free SVG scene builder for scatter and line figures. */

export interface Bounds {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export const WIDTH = 640;
export const HEIGHT = 480;
const MARGIN = 56;

export function boundsOf(xs: number[], ys: number[]): Bounds {
  let xMin = Math.min(...xs);
  let xMax = Math.max(...xs);
  let yMin = Math.min(...ys);
  let yMax = Math.max(...ys);
  const padX = (xMax - xMin || 1) * 0.08;
  const padY = (yMax - yMin || 1) * 0.08;
  return { xMin: xMin - padX, xMax: xMax + padX, yMin: yMin - padY, yMax: yMax + padY };
}

export class Scene {
  private parts: string[] = [];

  constructor(private bounds: Bounds, private title: string) {}

  x(value: number): number {
    const { xMin, xMax } = this.bounds;
    return MARGIN + ((value - xMin) / (xMax - xMin)) * (WIDTH - 2 * MARGIN);
  }

  y(value: number): number {
    const { yMin, yMax } = this.bounds;
    return HEIGHT - MARGIN - ((value - yMin) / (yMax - yMin)) * (HEIGHT - 2 * MARGIN);
  }

  axes(xLabel: string, yLabel: string): void {
    const { xMin, xMax, yMin, yMax } = this.bounds;
    if (xMin < 0 && xMax > 0) {
      this.parts.push(
        `<line x1="${this.x(0).toFixed(2)}" y1="${MARGIN}" x2="${this.x(0).toFixed(2)}" y2="${HEIGHT - MARGIN}" stroke="#ccc"/>`,
      );
    }
    if (yMin < 0 && yMax > 0) {
      this.parts.push(
        `<line x1="${MARGIN}" y1="${this.y(0).toFixed(2)}" x2="${WIDTH - MARGIN}" y2="${this.y(0).toFixed(2)}" stroke="#ccc"/>`,
      );
    }
    this.parts.push(
      `<rect x="${MARGIN}" y="${MARGIN}" width="${WIDTH - 2 * MARGIN}" height="${HEIGHT - 2 * MARGIN}" fill="none" stroke="#444"/>`,
      `<text x="${WIDTH / 2}" y="${HEIGHT - 12}" text-anchor="middle" font-size="14">${xLabel}</text>`,
      `<text x="16" y="${HEIGHT / 2}" text-anchor="middle" font-size="14" transform="rotate(-90 16 ${HEIGHT / 2})">${yLabel}</text>`,
      `<text x="${WIDTH / 2}" y="28" text-anchor="middle" font-size="16">${this.title}</text>`,
    );
  }

  point(px: number, py: number, emphasized: boolean, tooltip?: string): void {
    const cx = this.x(px).toFixed(2);
    const cy = this.y(py).toFixed(2);
    const body = tooltip ? `<title>${tooltip}</title>` : "";
    if (emphasized) {
      this.parts.push(
        `<circle class="dominant" cx="${cx}" cy="${cy}" r="7" fill="#d62728" stroke="#7f0e0e">${body}</circle>`,
      );
    } else {
      this.parts.push(
        `<circle class="mode" cx="${cx}" cy="${cy}" r="4" fill="#1f4e79" fill-opacity="0.85">${body}</circle>`,
      );
    }
  }

  polyline(xs: number[], ys: number[], color = "#1f4e79"): void {
    const pts = xs
      .map((vx, i) => `${this.x(vx).toFixed(2)},${this.y(ys[i]).toFixed(2)}`)
      .join(" ");
    this.parts.push(`<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="2"/>`);
  }

  render(): string {
    return [
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
      ...this.parts,
      "</svg>",
      "",
    ].join("\n");
  }
}
