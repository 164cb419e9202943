/**
 * Minimal retained scene graph shared by the PDF (vector) and PNG (raster)
 * backends.  Coordinates are in points with the origin at the top left.
 */

export interface Rect {
  kind: "rect";
  x: number;
  y: number;
  w: number;
  h: number;
  fill: string;
}

export interface PolyLine {
  kind: "polyline";
  points: [number, number][];
  stroke: string;
  width: number;
  dash?: number[];
}

export interface TextItem {
  kind: "text";
  x: number;
  y: number;
  text: string;
  size: number;
  fill: string;
  anchor: "start" | "middle" | "end";
  /** Rotation in degrees about (x, y), counterclockwise negative. */
  rotate?: number;
}

export type Item = Rect | PolyLine | TextItem;

export interface Scene {
  width: number;
  height: number;
  items: Item[];
}

export function rect(x: number, y: number, w: number, h: number, fill: string): Rect {
  return { kind: "rect", x, y, w, h, fill };
}

export function polyline(
  points: [number, number][],
  stroke: string,
  width = 1,
  dash?: number[],
): PolyLine {
  return { kind: "polyline", points, stroke, width, dash };
}

export function text(
  x: number,
  y: number,
  content: string,
  size = 9,
  anchor: TextItem["anchor"] = "middle",
  fill = "#000000",
  rotate?: number,
): TextItem {
  return { kind: "text", x, y, text: content, size, fill, anchor, rotate };
}
