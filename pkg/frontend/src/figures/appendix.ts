/**
 * Appendix maps over detuning and drive strength: analytic/numeric Arnold
 * difference, limit-cycle distortion, and the |rho02|, |rho12| coherences,
 * each with the distortion-threshold contour dashed in white.
 */
import { loadSweep, pivot, type SweepTable } from "../csv.js";
import { runFigure } from "../cli.js";
import { Panel } from "../plot.js";
import type { Item, Scene } from "../scene.js";
import { isMain } from "./util.js";

const W = 190;
const H = 150;

function mapPanel(
  t: SweepTable,
  vCol: string,
  x0: number,
  y0: number,
  title: string,
): Item[] {
  const grid = pivot(t, "delta_ratio", "Omega_ratio", vCol);
  const panel = new Panel({
    x0, y0, w: W, h: H,
    xDomain: [grid.xs[0], grid.xs[grid.xs.length - 1]],
    yDomain: [grid.ys[0], grid.ys[grid.ys.length - 1]],
    xLabel: "delta / gamma1",
    yLabel: "Omega / gamma1",
    title,
  });
  panel.heatmap(grid.xs, grid.ys, grid.value);
  const eps = Number(t.config?.epsilon ?? 0.1);
  const dist = pivot(t, "delta_ratio", "Omega_ratio", "distortion");
  panel.contourByColumn(dist.xs, dist.ys, dist.value, eps, "#ffffff", 1.4, [4, 3]);
  return panel.items;
}

export function buildAppendix(csvDir: string): Scene {
  const items: Item[] = [
    ...mapPanel(loadSweep(csvDir, "appendix-arnold-diff"), "S_absdiff",
      60, 25, "|S_num - S_analytic|"),
    ...mapPanel(loadSweep(csvDir, "appendix-distortion"), "distortion",
      340, 25, "limit cycle distortion"),
    ...mapPanel(loadSweep(csvDir, "appendix-coh02"), "coh02",
      60, 235, "|rho02|"),
    ...mapPanel(loadSweep(csvDir, "appendix-coh12"), "coh12",
      340, 235, "|rho12|"),
  ];
  return { width: 620, height: 440, items };
}

if (isMain(import.meta.url)) {
  void runFigure("appendix", "appendix Arnold-tongue maps (appendix presets)", buildAppendix);
}
