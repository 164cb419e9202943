/** Vector backend: scene graph to a single-page PDF via pdfkit. */
import * as fs from "node:fs";
import PDFDocument from "pdfkit";

import type { Scene } from "./scene.js";

/** Render to a PDF buffer.  CreationDate is pinned so output is deterministic. */
export function renderPdf(scene: Scene): Promise<Buffer> {
  const doc = new PDFDocument({
    size: [scene.width, scene.height],
    margin: 0,
    info: { CreationDate: new Date(0) },
  });
  const chunks: Buffer[] = [];
  doc.on("data", (c: Buffer) => chunks.push(c));
  const done = new Promise<Buffer>((resolve) => {
    doc.on("end", () => resolve(Buffer.concat(chunks)));
  });

  doc.rect(0, 0, scene.width, scene.height).fill("#ffffff");
  for (const item of scene.items) {
    if (item.kind === "rect") {
      doc.rect(item.x, item.y, item.w, item.h).fill(item.fill);
    } else if (item.kind === "polyline") {
      doc.moveTo(item.points[0][0], item.points[0][1]);
      for (const [x, y] of item.points.slice(1)) doc.lineTo(x, y);
      doc.lineWidth(item.width);
      if (item.dash) doc.dash(item.dash[0], { space: item.dash[1] ?? item.dash[0] });
      else doc.undash();
      doc.stroke(item.stroke);
    } else {
      doc.save();
      if (item.rotate) doc.rotate(item.rotate, { origin: [item.x, item.y] });
      doc.font("Helvetica").fontSize(item.size).fillColor(item.fill);
      const w = doc.widthOfString(item.text);
      const dx = item.anchor === "middle" ? -w / 2 : item.anchor === "end" ? -w : 0;
      doc.text(item.text, item.x + dx, item.y - item.size * 0.8, { lineBreak: false });
      doc.restore();
    }
  }
  doc.end();
  return done;
}

export async function writePdf(scene: Scene, outPath: string): Promise<void> {
  fs.writeFileSync(outPath, await renderPdf(scene));
}
