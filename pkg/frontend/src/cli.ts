/** Shared CLI plumbing for the per-figure scripts. */
import * as fs from "node:fs";
import * as path from "node:path";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { writePdf } from "./pdf.js";
import { writePng } from "./raster.js";
import type { Scene } from "./scene.js";

export type Format = "pdf" | "png" | "both";

export interface RenderArgs {
  csvDir: string;
  outDir: string;
  format: Format;
}

export function parseArgs(argv: string[], description: string): RenderArgs {
  const a = yargs(argv)
    .usage(description)
    .option("csv-dir", {
      type: "string",
      default: ".",
      describe: "directory holding the sweep CSVs",
    })
    .option("out-dir", {
      type: "string",
      default: ".",
      describe: "directory to write images into",
    })
    .option("format", {
      choices: ["pdf", "png", "both"] as const,
      default: "both" as Format,
      describe: "output format(s)",
    })
    .strict()
    .parseSync();
  return { csvDir: a["csv-dir"], outDir: a["out-dir"], format: a.format };
}

/** Write `<outDir>/<name>.pdf` / `.png` per the requested format. */
export async function emit(
  scene: Scene,
  outDir: string,
  name: string,
  format: Format,
): Promise<string[]> {
  fs.mkdirSync(outDir, { recursive: true });
  const written: string[] = [];
  if (format === "pdf" || format === "both") {
    const p = path.join(outDir, `${name}.pdf`);
    await writePdf(scene, p);
    written.push(p);
  }
  if (format === "png" || format === "both") {
    const p = path.join(outDir, `${name}.png`);
    writePng(scene, p);
    written.push(p);
  }
  return written;
}

/** Run a figure builder as a script: parse args, render, report, exit code. */
export async function runFigure(
  name: string,
  description: string,
  build: (csvDir: string) => Scene | Record<string, Scene>,
): Promise<void> {
  const args = parseArgs(hideBin(process.argv), description);
  try {
    const built = build(args.csvDir);
    const scenes: Record<string, Scene> =
      "items" in built ? { [name]: built as Scene } : (built as Record<string, Scene>);
    for (const [name, scene] of Object.entries(scenes)) {
      for (const file of await emit(scene, args.outDir, name, args.format)) {
        console.log(`wrote ${file}`);
      }
    }
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    process.exitCode = 1;
  }
}
