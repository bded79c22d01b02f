/**
 * Readers for the CLI's emitted CSV schemas. These are strict consumers:
 * they never recompute physics, and a missing column is a hard SchemaError
 * naming the column.
 */

export class SchemaError extends Error {}

export interface SpectrumRow {
  label: number;
  re: number;
  im: number;
  abs: number;
  winding: number;
  residual: number;
  dominant: boolean;
}

export interface SweepRow {
  sites: number;
  gap: number;
}

export interface VectorRow {
  site: number;
  re: number;
  im: number;
  abs: number;
  phase: number;
}

function splitTable(text: string): { header: string[]; rows: string[][] } {
  const lines = text
    .split(/\r?\n/)
    .map((line) => line.trim())
    .filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new SchemaError("empty file: expected a header row");
  }
  const header = lines[0].split(",");
  const rows = lines.slice(1).map((line) => line.split(","));
  return { header, rows };
}

function columnIndex(header: string[], names: string[], file: string): number[] {
  return names.map((name) => {
    const at = header.indexOf(name);
    if (at < 0) {
      throw new SchemaError(`${file}: missing column "${name}" (header: ${header.join(",")})`);
    }
    return at;
  });
}

function num(cell: string, column: string, file: string): number {
  const value = Number(cell);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`${file}: column "${column}" holds non-numeric cell ${JSON.stringify(cell)}`);
  }
  return value;
}

export function parseSpectrumCsv(text: string, file = "spectrum"): SpectrumRow[] {
  const { header, rows } = splitTable(text);
  const names = ["label", "re_e", "im_e", "abs_e", "winding", "residual", "dominant"];
  const at = columnIndex(header, names, file);
  return rows.map((cells) => ({
    label: num(cells[at[0]], "label", file),
    re: num(cells[at[1]], "re_e", file),
    im: num(cells[at[2]], "im_e", file),
    abs: num(cells[at[3]], "abs_e", file),
    winding: num(cells[at[4]], "winding", file),
    residual: num(cells[at[5]], "residual", file),
    dominant: num(cells[at[6]], "dominant", file) !== 0,
  }));
}

export function parseSweepCsv(text: string, file = "sweep"): SweepRow[] {
  const { header, rows } = splitTable(text);
  const at = columnIndex(header, ["sites", "gap"], file);
  return rows.map((cells) => ({
    sites: num(cells[at[0]], "sites", file),
    gap: num(cells[at[1]], "gap", file),
  }));
}

export function parseVectorCsv(text: string, file = "vector"): VectorRow[] {
  const { header, rows } = splitTable(text);
  const at = columnIndex(header, ["site", "re", "im", "abs", "phase"], file);
  return rows.map((cells) => ({
    site: num(cells[at[0]], "site", file),
    re: num(cells[at[1]], "re", file),
    im: num(cells[at[2]], "im", file),
    abs: num(cells[at[3]], "abs", file),
    phase: num(cells[at[4]], "phase", file),
  }));
}
