#!/usr/bin/env node
/**
 * Usage:
 *   qdarwin-plots render --kind KIND --in a.csv[,b.csv...] --out fig.png
 *
 * KIND is one of: pip, redundancy_vs_squeeze, redundancy_vs_delta,
 * band_spectrum.  The output format follows the extension (.svg or .png).
 */

import { pathToFileURL } from "node:url";

import { SchemaError } from "./csv.js";
import { FIGURE_KINDS, FigureKind } from "./figures.js";
import { render } from "./render.js";

function usage(message?: string): never {
  if (message) console.error(`error: ${message}`);
  console.error(
    "usage: qdarwin-plots render --kind KIND --in a.csv[,b.csv...] --out fig.png\n" +
      `       KIND: ${FIGURE_KINDS.join(", ")}`,
  );
  process.exit(2);
}

export function main(argv: string[]): number {
  if (argv[0] !== "render") usage(`unknown command ${argv[0] ?? "(none)"}`);
  let kind: string | undefined;
  let inputs: string[] = [];
  let output: string | undefined;
  for (let i = 1; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (value === undefined) usage(`missing value for ${flag}`);
    if (flag === "--kind") kind = value;
    else if (flag === "--in") inputs = value.split(",").filter((s) => s.length > 0);
    else if (flag === "--out") output = value;
    else usage(`unknown flag ${flag}`);
  }
  if (!kind || !FIGURE_KINDS.includes(kind as FigureKind)) {
    usage(`--kind must be one of ${FIGURE_KINDS.join(", ")}`);
  }
  if (inputs.length === 0) usage("--in requires at least one CSV path");
  if (!output) usage("--out is required");
  try {
    render({ kind: kind as FigureKind, inputs, output });
    console.log(output);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    if (err instanceof Error && "code" in err) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(main(process.argv.slice(2)));
}
