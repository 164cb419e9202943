/**
 * Noise-boosted synchronization and entrainment: steady-state coherences
 * under threshold driving, entrainment vs drive strength for harmonic and
 * squeeze driving, and the relative-entrainment crossover.
 */
import { loadSweep, numeric, sliceRows, uniqueSorted, type SweepTable } from "../csv.js";
import { runFigure } from "../cli.js";
import { Panel } from "../plot.js";
import type { Item, Scene } from "../scene.js";
import { COLORS, domainOf, isMain } from "./util.js";

const W = 180;
const H = 130;

function coherencePanel(t: SweepTable, g2: number, x0: number, y0: number): Item[] {
  const rows = sliceRows(t, "gamma2_ratio", g2);
  const kappa = rows.map((r) => Number(r.kappa_ratio));
  const series: [string, number[]][] = [
    ["|rho01|", rows.map((r) => Number(r.coh01))],
    ["|rho02|", rows.map((r) => Number(r.coh02))],
    ["|rho12|", rows.map((r) => Number(r.coh12))],
  ];
  const panel = new Panel({
    x0, y0, w: W, h: H,
    xDomain: [Math.min(...kappa), Math.max(...kappa)],
    yDomain: domainOf([...series.map(([, v]) => v), [0]]),
    xLabel: "kappa / gamma1",
    yLabel: "coherence",
    title: `threshold drive, gamma2/gamma1 = ${g2}`,
  });
  series.forEach(([label, ys], i) => panel.line(kappa, ys, COLORS[i], 1.2));
  panel.legend(series.map(([label], i) => ({ label, stroke: COLORS[i] })));
  return panel.items;
}

function entrainmentPanel(
  t: SweepTable,
  driveCol: "Omega_ratio" | "eta_ratio",
  x0: number,
  y0: number,
  title: string,
): Item[] {
  const g2s = uniqueSorted(numeric(t, "gamma2_ratio"));
  const drives = numeric(t, driveCol);
  const panel = new Panel({
    x0, y0, w: W, h: H,
    xDomain: [Math.min(...drives), Math.max(...drives)],
    yDomain: domainOf([numeric(t, "delta_obs"), [0]]),
    xLabel: `${driveCol === "Omega_ratio" ? "Omega" : "eta"} / gamma1`,
    yLabel: "delta_obs",
    title,
  });
  g2s.forEach((g2, i) => {
    const rows = sliceRows(t, "gamma2_ratio", g2);
    panel.line(
      rows.map((r) => Number(r[driveCol])),
      rows.map((r) => Number(r.delta_obs)),
      COLORS[i],
      1.2,
    );
  });
  panel.legend(g2s.map((g2, i) => ({ label: `gamma2=${g2}`, stroke: COLORS[i] })));
  return panel.items;
}

function crossoverPanel(t: SweepTable, x0: number, y0: number): Item[] {
  const g2 = numeric(t, "gamma2_ratio");
  const harm = numeric(t, "delta_rel_harmonic").map(Math.abs);
  const sq = numeric(t, "delta_rel_squeeze").map(Math.abs);
  const panel = new Panel({
    x0, y0, w: W, h: H,
    xDomain: [Math.min(...g2), Math.max(...g2)],
    yDomain: domainOf([harm, sq, [0]]),
    xLog: true,
    xLabel: "gamma2 / gamma1",
    yLabel: "|relative entrainment|",
    title: "entrainment crossover",
  });
  panel.line(g2, harm, COLORS[0], 1.2);
  panel.line(g2, sq, COLORS[1], 1.2, [3, 2]);
  panel.legend([
    { label: "harmonic", stroke: COLORS[0] },
    { label: "squeeze", stroke: COLORS[1], dash: [3, 2] },
  ]);
  return panel.items;
}

export function buildFig4(csvDir: string): Scene {
  const coh = loadSweep(csvDir, "fig4ab-coherences");
  const g2s = uniqueSorted(numeric(coh, "gamma2_ratio"));
  const items: Item[] = [
    ...coherencePanel(coh, g2s[0], 55, 25),
    ...coherencePanel(coh, g2s[g2s.length - 1], 320, 25),
    ...entrainmentPanel(
      loadSweep(csvDir, "fig4c-harmonic-entrainment"), "Omega_ratio",
      55, 215, "harmonic entrainment"),
    ...entrainmentPanel(
      loadSweep(csvDir, "fig4d-squeeze-entrainment"), "eta_ratio",
      320, 215, "squeeze entrainment"),
    ...crossoverPanel(loadSweep(csvDir, "fig4e-crossover"), 55, 405),
  ];
  return { width: 580, height: 595, items };
}

if (isMain(import.meta.url)) {
  void runFigure("fig4", "coherences and entrainment (fig4 presets)", buildFig4);
}
