/**
 * File-level entry: read CSVs, build the scene for the requested figure
 * kind, and write one SVG or PNG image.  Nothing is written when any
 * input fails validation.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { extname } from "node:path";

import { SchemaError, parseCsv } from "./csv.js";
import { FigureKind, buildScene } from "./figures.js";
import { sceneToPng } from "./png.js";
import { sceneToSvg } from "./svg.js";

export interface FigureSpec {
  kind: FigureKind;
  inputs: string[];
  output: string;
}

export function render(spec: FigureSpec): void {
  const tables = spec.inputs.map((p) => parseCsv(readFileSync(p, "utf8"), p));
  const scene = buildScene(spec.kind, tables);
  const ext = extname(spec.output).toLowerCase();
  if (ext === ".svg") {
    writeFileSync(spec.output, sceneToSvg(scene));
  } else if (ext === ".png") {
    writeFileSync(spec.output, sceneToPng(scene));
  } else {
    throw new SchemaError(`unsupported output extension ${ext || "(none)"}; use .svg or .png`);
  }
}
