/**
 * Panel: one set of axes inside a scene, with line, heatmap, and contour
 * helpers.  Scales come from d3-scale; everything is emitted as scene items.
 */
import { extent } from "d3-array";
import { scaleLinear, scaleLog, type ScaleContinuousNumeric } from "d3-scale";

import { viridis } from "./colormap.js";
import { polyline, rect, text, type Item } from "./scene.js";

export interface PanelOptions {
  x0: number;
  y0: number;
  w: number;
  h: number;
  xDomain: [number, number];
  yDomain: [number, number];
  xLog?: boolean;
  yLog?: boolean;
  xLabel?: string;
  yLabel?: string;
  title?: string;
}

const TICK = 4;
const FONT = 8;

function fmt(v: number): string {
  if (v !== 0 && (Math.abs(v) >= 1e4 || Math.abs(v) < 1e-3)) {
    return v.toExponential(0).replace("e+", "e").replace("e0", "1");
  }
  return `${Number(v.toPrecision(4))}`;
}

export class Panel {
  readonly items: Item[] = [];
  readonly sx: ScaleContinuousNumeric<number, number>;
  readonly sy: ScaleContinuousNumeric<number, number>;
  private readonly o: PanelOptions;

  constructor(o: PanelOptions) {
    this.o = o;
    this.sx = (o.xLog ? scaleLog() : scaleLinear())
      .domain(o.xDomain)
      .range([o.x0, o.x0 + o.w]);
    this.sy = (o.yLog ? scaleLog() : scaleLinear())
      .domain(o.yDomain)
      .range([o.y0 + o.h, o.y0]);
    this.frame();
  }

  private frame(): void {
    const { x0, y0, w, h, xLabel, yLabel, title } = this.o;
    this.items.push(
      polyline(
        [[x0, y0], [x0 + w, y0], [x0 + w, y0 + h], [x0, y0 + h], [x0, y0]],
        "#000000",
        0.8,
      ),
    );
    for (const v of this.sx.ticks(5)) {
      const px = this.sx(v);
      this.items.push(polyline([[px, y0 + h], [px, y0 + h + TICK]], "#000000", 0.8));
      this.items.push(text(px, y0 + h + TICK + FONT, fmt(v), FONT, "middle"));
    }
    for (const v of this.sy.ticks(5)) {
      const py = this.sy(v);
      this.items.push(polyline([[x0 - TICK, py], [x0, py]], "#000000", 0.8));
      this.items.push(text(x0 - TICK - 2, py + FONT / 3, fmt(v), FONT, "end"));
    }
    if (xLabel) {
      this.items.push(text(x0 + w / 2, y0 + h + TICK + 2.6 * FONT, xLabel, FONT + 1));
    }
    if (yLabel) {
      this.items.push(
        text(x0 - TICK - 4.5 * FONT, y0 + h / 2, yLabel, FONT + 1, "middle", "#000000", -90),
      );
    }
    if (title) {
      this.items.push(text(x0 + w / 2, y0 - 6, title, FONT + 1));
    }
  }

  /** Polyline through (xs[i], ys[i]); non-finite points break the line. */
  line(xs: number[], ys: number[], stroke: string, width = 1.2, dash?: number[]): void {
    let run: [number, number][] = [];
    const flush = () => {
      if (run.length > 1) this.items.push(polyline(run, stroke, width, dash));
      run = [];
    };
    for (let i = 0; i < xs.length; i++) {
      if (Number.isFinite(xs[i]) && Number.isFinite(ys[i])) {
        run.push([this.sx(xs[i]), this.sy(ys[i])]);
      } else {
        flush();
      }
    }
    flush();
  }

  /**
   * Filled-cell heatmap over the grid xs x ys with value(xi, yi) lookup.
   * Cell edges are midpoints between neighbouring grid values.
   */
  heatmap(
    xs: number[],
    ys: number[],
    value: (xi: number, yi: number) => number,
    domain?: [number, number],
  ): [number, number] {
    const all: number[] = [];
    for (let i = 0; i < xs.length; i++) {
      for (let j = 0; j < ys.length; j++) {
        const v = value(i, j);
        if (Number.isFinite(v)) all.push(v);
      }
    }
    const [lo, hi] = domain ?? (extent(all) as [number, number]);
    const span = hi - lo || 1;
    const edges = (g: number[], s: ScaleContinuousNumeric<number, number>) => {
      const e: number[] = [];
      for (let i = 0; i <= g.length; i++) {
        const a = g[Math.max(0, i - 1)];
        const b = g[Math.min(g.length - 1, i)];
        e.push(i === 0 || i === g.length ? s(b === a ? a : (a + b) / 2) : s((a + b) / 2));
      }
      return e;
    };
    const ex = edges(xs, this.sx);
    const ey = edges(ys, this.sy);
    for (let i = 0; i < xs.length; i++) {
      for (let j = 0; j < ys.length; j++) {
        const v = value(i, j);
        const x = Math.min(ex[i], ex[i + 1]);
        const y = Math.min(ey[j], ey[j + 1]);
        this.items.push(
          rect(x, y, Math.abs(ex[i + 1] - ex[i]), Math.abs(ey[j + 1] - ey[j]),
            viridis((v - lo) / span)),
        );
      }
    }
    return [lo, hi];
  }

  /**
   * Single level contour of value(xi, yi) = level as an overlay polyline:
   * for each x column, the first y where the value crosses the level,
   * linearly interpolated.  Suits monotone-in-y fields (distortion maps).
   */
  contourByColumn(
    xs: number[],
    ys: number[],
    value: (xi: number, yi: number) => number,
    level: number,
    stroke: string,
    width = 1.2,
    dash?: number[],
  ): void {
    const pts: [number, number][] = [];
    for (let i = 0; i < xs.length; i++) {
      for (let j = 0; j + 1 < ys.length; j++) {
        const a = value(i, j);
        const b = value(i, j + 1);
        if (!Number.isFinite(a) || !Number.isFinite(b)) continue;
        if ((a - level) * (b - level) <= 0 && a !== b) {
          const t = (level - a) / (b - a);
          pts.push([this.sx(xs[i]), this.sy(ys[j] + t * (ys[j + 1] - ys[j]))]);
          break;
        }
      }
    }
    if (pts.length > 1) this.items.push(polyline(pts, stroke, width, dash));
  }

  legend(entries: { label: string; stroke: string; dash?: number[] }[]): void {
    const { x0, y0, w } = this.o;
    let y = y0 + 10;
    for (const e of entries) {
      const lx = x0 + w - 64;
      this.items.push(polyline([[lx, y], [lx + 14, y]], e.stroke, 1.4, e.dash));
      this.items.push(text(lx + 18, y + FONT / 3, e.label, FONT, "start"));
      y += 11;
    }
  }
}
