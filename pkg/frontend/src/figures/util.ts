/** Shared bits for the figure scripts. */
import * as path from "node:path";
import { fileURLToPath } from "node:url";

export const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

/** Finite extent of several series, padded a little. */
export function domainOf(series: number[][], pad = 0.05): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const s of series) {
    for (const v of s) {
      if (Number.isFinite(v)) {
        lo = Math.min(lo, v);
        hi = Math.max(hi, v);
      }
    }
  }
  const span = hi - lo || Math.abs(hi) || 1;
  return [lo - pad * span, hi + pad * span];
}

/** True when the importing module is the script being executed. */
export function isMain(moduleUrl: string): boolean {
  return (
    typeof process.argv[1] === "string" &&
    path.resolve(process.argv[1]) === fileURLToPath(moduleUrl)
  );
}
