import * as path from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import {
  loadSweep,
  MissingColumnError,
  numeric,
  pivot,
  sliceRows,
  uniqueSorted,
} from "../src/csv.js";

const FIXTURES = path.join(path.dirname(fileURLToPath(import.meta.url)), "fixtures");

describe("loadSweep", () => {
  it("parses comments, config, and rows", () => {
    const t = loadSweep(FIXTURES, "fig1");
    expect(t.comments.some((c) => c.includes("config-sha256"))).toBe(true);
    expect(t.config).not.toBeNull();
    expect(t.config?.name).toBe("fig1");
    expect(t.rows.length).toBe(8);
    expect(t.columns).toContain("N_numeric");
  });

  it("errors with the preset name when the file is missing", () => {
    expect(() => loadSweep(FIXTURES, "fig99")).toThrow(/qvdp run fig99/);
  });
});

describe("numeric", () => {
  it("returns numbers", () => {
    const t = loadSweep(FIXTURES, "fig1");
    const n = numeric(t, "N_numeric");
    expect(n.every(Number.isFinite)).toBe(true);
    // undriven deep-quantum tail approaches 1/3
    expect(n[n.length - 1]).toBeCloseTo(1 / 3, 2);
  });

  it("names the missing column and the producing preset", () => {
    const t = loadSweep(FIXTURES, "fig1");
    expect(() => numeric(t, "S_numeric")).toThrow(MissingColumnError);
    expect(() => numeric(t, "S_numeric")).toThrow(/S_numeric.*fig1/);
  });
});

describe("grid helpers", () => {
  it("uniqueSorted sorts numerically", () => {
    expect(uniqueSorted([10, 2, 10, 1])).toEqual([1, 2, 10]);
  });

  it("sliceRows picks one drive strength", () => {
    const t = loadSweep(FIXTURES, "fig2a");
    const rows = sliceRows(t, "Omega_ratio", 0.1);
    expect(rows.length).toBe(9);
    expect(rows.every((r) => Number(r.Omega_ratio) === 0.1)).toBe(true);
  });

  it("pivot reconstructs the full grid", () => {
    const t = loadSweep(FIXTURES, "fig3a");
    const g = pivot(t, "kappa_ratio", "Omega_ratio", "S_numeric");
    expect(g.xs.length).toBe(6);
    expect(g.ys.length).toBe(6);
    for (let i = 0; i < g.xs.length; i++) {
      for (let j = 0; j < g.ys.length; j++) {
        expect(Number.isFinite(g.value(i, j))).toBe(true);
      }
    }
    // no drive, no synchronization
    expect(g.value(0, 0)).toBe(0);
  });
});
