/**
 * Arnold-tongue slices: synchronization measure vs detuning at three drive
 * strengths, numerics solid and closed form dashed, for two damping ratios.
 */
import { loadSweep, numeric, sliceRows, uniqueSorted, type SweepTable } from "../csv.js";
import { runFigure } from "../cli.js";
import { Panel } from "../plot.js";
import type { Item, Scene } from "../scene.js";
import { COLORS, domainOf, isMain } from "./util.js";

function panelFor(t: SweepTable, x0: number, title: string): Item[] {
  const omegas = uniqueSorted(numeric(t, "Omega_ratio"));
  const deltas = numeric(t, "delta_ratio");
  const panel = new Panel({
    x0,
    y0: 25,
    w: 220,
    h: 170,
    xDomain: [Math.min(...deltas), Math.max(...deltas)],
    yDomain: domainOf([numeric(t, "S_numeric"), [0]]),
    xLabel: "delta / gamma1",
    yLabel: "S",
    title,
  });
  omegas.forEach((omega, i) => {
    const rows = sliceRows(t, "Omega_ratio", omega);
    const d = rows.map((r) => Number(r.delta_ratio));
    panel.line(d, rows.map((r) => Number(r.S_numeric)), COLORS[i], 1.2);
    panel.line(d, rows.map((r) => Number(r.S_noiseless)), COLORS[i], 1.0, [3, 2]);
  });
  panel.legend(
    omegas.map((omega, i) => ({ label: `Omega=${omega}`, stroke: COLORS[i] })),
  );
  return panel.items;
}

export function buildFig2(csvDir: string): Scene {
  const items = [
    ...panelFor(loadSweep(csvDir, "fig2a"), 55, "gamma2/gamma1 = 100"),
    ...panelFor(loadSweep(csvDir, "fig2b"), 345, "gamma2/gamma1 = 1000"),
  ];
  return { width: 620, height: 250, items };
}

if (isMain(import.meta.url)) {
  void runFigure("fig2", "Arnold tongue slices (fig2a/fig2b presets)", buildFig2);
}
