/**
 * Undriven limit-cycle amplitude against the damping ratio: numerical curve
 * with the three closed-form regimes, log-log axes.
 */
import { loadSweep, numeric } from "../csv.js";
import { runFigure } from "../cli.js";
import { Panel } from "../plot.js";
import type { Scene } from "../scene.js";
import { COLORS, domainOf, isMain } from "./util.js";

export function buildFig1(csvDir: string): Scene {
  const t = loadSweep(csvDir, "fig1");
  const g2 = numeric(t, "gamma2_ratio");
  const curves: [string, number[], string, number[] | undefined][] = [
    ["numerical", numeric(t, "N_numeric"), "#000000", undefined],
    ["ansatz", numeric(t, "N_eq5"), COLORS[0], [4, 2]],
    ["system size exp.", numeric(t, "N_sse"), COLORS[1], [2, 2]],
    ["mean field", numeric(t, "N_meanfield"), COLORS[2], [6, 2]],
  ];
  const positive = curves.map(([, ys]) => ys.filter((v) => v > 0));
  const panel = new Panel({
    x0: 60,
    y0: 25,
    w: 280,
    h: 200,
    xDomain: [Math.min(...g2), Math.max(...g2)],
    yDomain: domainOf(positive, 0).map((v, i) => (i === 0 ? v * 0.8 : v * 1.25)) as [
      number,
      number,
    ],
    xLog: true,
    yLog: true,
    xLabel: "gamma2 / gamma1",
    yLabel: "N0",
    title: "undriven amplitude vs damping ratio",
  });
  for (const [label, ys, color, dash] of curves) {
    // log axes cannot show zeros (mean field above threshold only)
    panel.line(g2, ys.map((v) => (v > 0 ? v : NaN)), color, 1.2, dash);
  }
  panel.legend(curves.map(([label, , stroke, dash]) => ({ label, stroke, dash })));
  return { width: 400, height: 280, items: panel.items };
}

if (isMain(import.meta.url)) {
  void runFigure("fig1", "amplitude regime comparison (fig1 preset)", buildFig1);
}
