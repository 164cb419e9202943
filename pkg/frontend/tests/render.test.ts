import { PNG } from "pngjs";
import { describe, expect, it } from "vitest";

import { renderPdf } from "../src/pdf.js";
import { renderPng } from "../src/raster.js";
import { polyline, rect, text, type Scene } from "../src/scene.js";

const SCENE: Scene = {
  width: 100,
  height: 80,
  items: [
    rect(10, 10, 30, 20, "#ff0000"),
    polyline([[10, 60], [90, 60]], "#0000ff", 2),
    text(50, 40, "label", 9),
  ],
};

describe("pdf backend", () => {
  it("produces a valid non-empty PDF", async () => {
    const buf = await renderPdf(SCENE);
    expect(buf.length).toBeGreaterThan(500);
    expect(buf.subarray(0, 5).toString()).toBe("%PDF-");
  });

  it("is deterministic for identical scenes", async () => {
    const a = await renderPdf(SCENE);
    const b = await renderPdf(SCENE);
    expect(a.equals(b)).toBe(true);
  });
});

describe("png backend", () => {
  it("rasterizes rects and lines", () => {
    const buf = renderPng(SCENE, 1);
    const png = PNG.sync.read(buf);
    expect(png.width).toBe(100);
    expect(png.height).toBe(80);
    const px = (x: number, y: number) => {
      const i = (y * png.width + x) * 4;
      return [png.data[i], png.data[i + 1], png.data[i + 2]];
    };
    expect(px(20, 15)).toEqual([255, 0, 0]);   // inside the rect
    expect(px(50, 60)).toEqual([0, 0, 255]);   // on the line
    expect(px(95, 5)).toEqual([255, 255, 255]); // background
  });

  it("scales device pixels", () => {
    const png = PNG.sync.read(renderPng(SCENE, 2));
    expect(png.width).toBe(200);
  });
});
