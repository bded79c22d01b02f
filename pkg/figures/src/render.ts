/**
 * Figure jobs: one input CSV from the simulation CLI, one SVG out.
 * The renderers are read-only consumers: every number comes from the file,
 * and dominant modes are emphasized via the `dominant` column.
 */

import { readFileSync, writeFileSync, mkdirSync } from "node:fs";
import { dirname, basename } from "node:path";

import { parseSpectrumCsv, parseSweepCsv, parseVectorCsv } from "./csv.js";
import { Scene, boundsOf } from "./svg.js";

export type FigureKind = "complex-plane" | "gap-curve" | "profile" | "folding";

export interface FigureJob {
  kind: FigureKind;
  input: string;
  output: string;
  title?: string;
}

export interface RenderResult {
  output: string;
  points: number;
  emphasized: number;
}

function scatterSpectrum(text: string, file: string, title: string, folded: boolean): {
  svg: string;
  points: number;
  emphasized: number;
} {
  const rows = parseSpectrumCsv(text, file);
  const scene = new Scene(
    boundsOf(rows.map((r) => r.re), rows.map((r) => r.im)),
    title,
  );
  scene.axes("Re E", "Im E");
  // draw plain modes first so emphasized markers sit on top
  for (const row of rows.filter((r) => !r.dominant)) {
    scene.point(row.re, row.im, false, `label ${row.label}`);
  }
  for (const row of rows.filter((r) => r.dominant)) {
    const tip = folded ? `pair ${row.label}` : `winding ${row.winding}`;
    scene.point(row.re, row.im, true, tip);
  }
  return {
    svg: scene.render(),
    points: rows.length,
    emphasized: rows.filter((r) => r.dominant).length,
  };
}

function gapCurve(text: string, file: string, title: string) {
  const rows = parseSweepCsv(text, file);
  const scene = new Scene(
    boundsOf(rows.map((r) => r.sites), rows.map((r) => r.gap)),
    title,
  );
  scene.axes("sites", "dominance gap");
  scene.polyline(rows.map((r) => r.sites), rows.map((r) => r.gap));
  for (const row of rows) {
    scene.point(row.sites, row.gap, false, `N=${row.sites}`);
  }
  return { svg: scene.render(), points: rows.length, emphasized: 0 };
}

function profile(text: string, file: string, title: string) {
  const rows = parseVectorCsv(text, file);
  const scene = new Scene(
    boundsOf(rows.map((r) => r.site), [0, ...rows.map((r) => r.abs)]),
    title,
  );
  scene.axes("site", "|psi| (bars), phase/pi (dots)");
  for (const row of rows) {
    scene.polyline([row.site, row.site], [0, row.abs], "#1f4e79");
  }
  scene.polyline(rows.map((r) => r.site), rows.map((r) => r.abs), "#888");
  // phase overlay rescaled from [-pi, pi] into the amplitude band
  const top = Math.max(...rows.map((r) => r.abs));
  for (const row of rows) {
    scene.point(row.site, ((row.phase / Math.PI) * 0.5 + 0.5) * top, true,
      `site ${row.site}: phase ${row.phase.toFixed(4)}`);
  }
  return { svg: scene.render(), points: rows.length, emphasized: rows.length };
}

export function render(job: FigureJob): RenderResult {
  const text = readFileSync(job.input, "utf8");
  const file = basename(job.input);
  const title = job.title ?? file.replace(/\.csv$/, "");
  let result;
  switch (job.kind) {
    case "complex-plane":
      result = scatterSpectrum(text, file, title, false);
      break;
    case "folding":
      result = scatterSpectrum(text, file, title, true);
      break;
    case "gap-curve":
      result = gapCurve(text, file, title);
      break;
    case "profile":
      result = profile(text, file, title);
      break;
    default:
      throw new Error(`unknown figure kind ${String(job.kind)}`);
  }
  mkdirSync(dirname(job.output), { recursive: true });
  writeFileSync(job.output, result.svg);
  return { output: job.output, points: result.points, emphasized: result.emphasized };
}

/** The shipped figure set: input stem -> kind. */
export const SHIPPED: Array<{ stem: string; kind: FigureKind }> = [
  { stem: "fig1b", kind: "complex-plane" },
  { stem: "fig1d", kind: "gap-curve" },
  { stem: "fig1e", kind: "complex-plane" },
  { stem: "fig2c", kind: "complex-plane" },
  { stem: "fig2c.mode1", kind: "profile" },
  { stem: "fig2d", kind: "complex-plane" },
  { stem: "fig3b", kind: "complex-plane" },
  { stem: "fig3f", kind: "complex-plane" },
  { stem: "fig4c", kind: "folding" },
];
