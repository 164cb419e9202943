/**
 * Synchronization heatmaps over noise and drive strength, with the
 * threshold-driving curve overlaid in white.
 */
import { loadSweep, numeric, pivot, uniqueSorted, type SweepTable } from "../csv.js";
import { runFigure } from "../cli.js";
import { Panel } from "../plot.js";
import type { Scene } from "../scene.js";
import { isMain } from "./util.js";

export const THRESHOLD_COLOR = "#ffffff";

function heatmapScene(t: SweepTable, title: string): Scene {
  const grid = pivot(t, "kappa_ratio", "Omega_ratio", "S_numeric");
  const panel = new Panel({
    x0: 55,
    y0: 25,
    w: 240,
    h: 190,
    xDomain: [grid.xs[0], grid.xs[grid.xs.length - 1]],
    yDomain: [grid.ys[0], grid.ys[grid.ys.length - 1]],
    xLabel: "kappa / gamma1",
    yLabel: "Omega / gamma1",
    title,
  });
  panel.heatmap(grid.xs, grid.ys, grid.value);

  // threshold driving overlay: one Omega_th per kappa, clipped to the axis
  const kappas = uniqueSorted(numeric(t, "kappa_ratio"));
  const yMax = grid.ys[grid.ys.length - 1];
  const omegaTh = kappas.map((k) => {
    const row = t.rows.find((r) => Number(r.kappa_ratio) === k && !r.error);
    const v = row ? Number(row.Omega_th) : NaN;
    return v <= yMax ? v : NaN;
  });
  panel.line(kappas, omegaTh, THRESHOLD_COLOR, 1.6);
  return { width: 340, height: 265, items: panel.items };
}

export function buildFig3(csvDir: string): Record<string, Scene> {
  return {
    fig3a: heatmapScene(loadSweep(csvDir, "fig3a"), "S, gamma2/gamma1 = 1"),
    fig3b: heatmapScene(loadSweep(csvDir, "fig3b"), "S, gamma2/gamma1 = 100"),
  };
}

if (isMain(import.meta.url)) {
  void runFigure("fig3", "synchronization heatmaps (fig3a/fig3b presets)", buildFig3);
}
