/**
 * Reader for the sweep CSV contract: `#` comment lines carrying scenario
 * metadata (including the full config as JSON), then an RFC-4180 table.
 * This is the only interface to the solver package.
 */
import * as fs from "node:fs";
import * as path from "node:path";
import Papa from "papaparse";

export interface SweepTable {
  /** Preset / scenario name the file was produced from. */
  name: string;
  comments: string[];
  /** Parsed `# config: {...}` JSON, when present. */
  config: Record<string, unknown> | null;
  columns: string[];
  rows: Record<string, string>[];
}

export class MissingColumnError extends Error {
  constructor(column: string, preset: string) {
    super(
      `column '${column}' not found in the ${preset} CSV; ` +
        `re-run 'qvdp run ${preset}' with an output list that includes it`,
    );
    this.name = "MissingColumnError";
  }
}

export function loadSweep(csvDir: string, preset: string): SweepTable {
  const file = path.join(csvDir, `${preset}.csv`);
  if (!fs.existsSync(file)) {
    throw new Error(`missing ${file}; produce it with 'qvdp run ${preset}'`);
  }
  const text = fs.readFileSync(file, "utf8");
  const comments: string[] = [];
  const dataLines: string[] = [];
  for (const line of text.split("\n")) {
    if (line.startsWith("#")) comments.push(line);
    else if (line.trim() !== "") dataLines.push(line);
  }
  let config: Record<string, unknown> | null = null;
  for (const c of comments) {
    const m = c.match(/^# config: (.*)$/);
    if (m) config = JSON.parse(m[1]);
  }
  const parsed = Papa.parse<Record<string, string>>(dataLines.join("\n"), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    throw new Error(`${file}: ${parsed.errors[0].message}`);
  }
  return {
    name: preset,
    comments,
    config,
    columns: parsed.meta.fields ?? [],
    rows: parsed.data,
  };
}

/** One column as numbers, with nan passed through as NaN. */
export function numeric(table: SweepTable, column: string): number[] {
  if (!table.columns.includes(column)) {
    throw new MissingColumnError(column, table.name);
  }
  return table.rows.map((r) => Number(r[column]));
}

/** Sorted unique values of a column (grid axis reconstruction). */
export function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

export interface Grid {
  xs: number[];
  ys: number[];
  /** Value at grid indices (xi, yi); NaN where the sweep row failed. */
  value: (xi: number, yi: number) => number;
}

/** Pivot a two-axis sweep into a grid lookup for heatmaps. */
export function pivot(
  table: SweepTable,
  xCol: string,
  yCol: string,
  vCol: string,
): Grid {
  const xv = numeric(table, xCol);
  const yv = numeric(table, yCol);
  const vv = numeric(table, vCol);
  const xs = uniqueSorted(xv);
  const ys = uniqueSorted(yv);
  const map = new Map<string, number>();
  for (let i = 0; i < vv.length; i++) {
    map.set(`${xv[i]}|${yv[i]}`, vv[i]);
  }
  return {
    xs,
    ys,
    value: (xi, yi) => map.get(`${xs[xi]}|${ys[yi]}`) ?? NaN,
  };
}

/** Rows where `column` equals `value` exactly (string comparison-safe). */
export function sliceRows(
  table: SweepTable,
  column: string,
  value: number,
): Record<string, string>[] {
  if (!table.columns.includes(column)) {
    throw new MissingColumnError(column, table.name);
  }
  return table.rows.filter((r) => Number(r[column]) === value);
}
