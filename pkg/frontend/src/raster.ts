/**
 * Raster backend: scene graph to PNG via a small software rasterizer and
 * pngjs encoding.  Rects and polylines only; text is a vector-side concern
 * (no headless canvas in this environment), so labels appear in the PDF.
 */
import * as fs from "node:fs";
import { PNG } from "pngjs";

import type { Scene } from "./scene.js";

function parseColor(hex: string): [number, number, number] {
  const h = hex.replace("#", "");
  return [
    parseInt(h.slice(0, 2), 16),
    parseInt(h.slice(2, 4), 16),
    parseInt(h.slice(4, 6), 16),
  ];
}

class Canvas {
  readonly png: PNG;

  constructor(readonly width: number, readonly height: number) {
    this.png = new PNG({ width, height });
    this.png.data.fill(255);
  }

  set(x: number, y: number, rgb: [number, number, number]): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = (y * this.width + x) * 4;
    this.png.data[i] = rgb[0];
    this.png.data[i + 1] = rgb[1];
    this.png.data[i + 2] = rgb[2];
    this.png.data[i + 3] = 255;
  }

  fillRect(x: number, y: number, w: number, h: number, rgb: [number, number, number]): void {
    for (let yy = Math.floor(y); yy < Math.ceil(y + h); yy++) {
      for (let xx = Math.floor(x); xx < Math.ceil(x + w); xx++) {
        this.set(xx, yy, rgb);
      }
    }
  }

  /** Solid segment with a square brush of the given radius. */
  segment(
    x0: number, y0: number, x1: number, y1: number,
    rgb: [number, number, number], radius: number,
  ): void {
    const steps = Math.max(1, Math.ceil(Math.hypot(x1 - x0, y1 - y0)));
    for (let s = 0; s <= steps; s++) {
      const x = x0 + ((x1 - x0) * s) / steps;
      const y = y0 + ((y1 - y0) * s) / steps;
      for (let dy = -radius; dy <= radius; dy++) {
        for (let dx = -radius; dx <= radius; dx++) {
          this.set(x + dx, y + dy, rgb);
        }
      }
    }
  }
}

/** Render to a PNG buffer at `scale` device pixels per scene point. */
export function renderPng(scene: Scene, scale = 2): Buffer {
  const cv = new Canvas(
    Math.ceil(scene.width * scale),
    Math.ceil(scene.height * scale),
  );
  for (const item of scene.items) {
    if (item.kind === "rect") {
      cv.fillRect(item.x * scale, item.y * scale, item.w * scale, item.h * scale,
        parseColor(item.fill));
    } else if (item.kind === "polyline") {
      const rgb = parseColor(item.stroke);
      const radius = Math.max(0, Math.round((item.width * scale) / 2) - 1);
      for (let i = 0; i + 1 < item.points.length; i++) {
        const [x0, y0] = item.points[i];
        const [x1, y1] = item.points[i + 1];
        cv.segment(x0 * scale, y0 * scale, x1 * scale, y1 * scale, rgb, radius);
      }
    }
    // text items are skipped in the raster backend
  }
  return PNG.sync.write(cv.png);
}

export function writePng(scene: Scene, outPath: string, scale = 2): void {
  fs.writeFileSync(outPath, renderPng(scene, scale));
}
