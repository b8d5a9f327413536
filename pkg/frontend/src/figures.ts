/**
 * Figure kinds: how each documented CSV schema maps onto a Scene.
 * This tool only rearranges numbers that the simulator already computed;
 * nothing physical is recomputed here.
 */

import { basename } from "node:path";

import { SchemaError, Table, column, requireColumns } from "./csv.js";
import { Axis, PALETTE, Point, Scene, ScaleKind, Series, padRange } from "./scene.js";

export type FigureKind =
  | "pip"
  | "redundancy_vs_squeeze"
  | "redundancy_vs_delta"
  | "band_spectrum";

export const FIGURE_KINDS: FigureKind[] = [
  "pip",
  "redundancy_vs_squeeze",
  "redundancy_vs_delta",
  "band_spectrum",
];

const SIZE = { width: 640, height: 420 };

function shortName(path: string): string {
  return basename(path).replace(/\.csv$/i, "");
}

function finite(points: Point[]): Point[] {
  return points.filter((p) => Number.isFinite(p.x) && Number.isFinite(p.y));
}

function axisFromValues(values: number[], scale: ScaleKind, label: string): Axis {
  const usable = values.filter((v) => Number.isFinite(v) && (scale === "linear" || v > 0));
  if (usable.length === 0) {
    throw new SchemaError(`nothing to plot on ${label} axis`);
  }
  const [min, max] = padRange(Math.min(...usable), Math.max(...usable), scale);
  return { scale, label, min, max };
}

function dataAndTheorySeries(
  label: string,
  color: string,
  x: number[],
  y: number[],
  err: number[] | null,
  theory: number[],
): Series[] {
  const pts: Point[] = x.map((xi, i) => ({ x: xi, y: y[i], err: err ? err[i] : undefined }));
  const thPts: Point[] = x.map((xi, i) => ({ x: xi, y: theory[i] }));
  return [
    { label, color, markers: true, line: false, points: finite(pts) },
    { label: "", color, markers: false, line: true, points: finite(thPts) },
  ];
}

function buildPip(tables: Table[]): Scene {
  const series: Series[] = [];
  for (const [i, t] of tables.entries()) {
    requireColumns(t, ["f", "I_mean", "I_stderr", "I_theory"]);
    series.push(
      ...dataAndTheorySeries(
        shortName(t.path),
        PALETTE[i % PALETTE.length],
        column(t, "f"),
        column(t, "I_mean"),
        column(t, "I_stderr"),
        column(t, "I_theory"),
      ),
    );
  }
  const ys = series.flatMap((s) => s.points.map((p) => p.y));
  return {
    title: "partial information vs fragment fraction",
    ...SIZE,
    x: { scale: "linear", label: "fragment fraction f", min: 0, max: 1 },
    y: axisFromValues(ys.concat([0]), "linear", "mutual information (nats)"),
    series,
  };
}

interface GroupSpec {
  xColumn: "s" | "delta";
  groupColumns: ["delta" | "s", "t"];
  xScale: ScaleKind;
  xLabel: string;
  title: string;
}

function buildRedundancy(tables: Table[], spec: GroupSpec): Scene {
  const series: Series[] = [];
  let colorIdx = 0;
  for (const t of tables) {
    requireColumns(t, ["s", "delta", "t", "R_numeric", "R_stderr", "R_theory"]);
    const keys = t.data.get(spec.groupColumns[0])!.map((a, i) => {
      const b = t.data.get(spec.groupColumns[1])![i];
      return `${spec.groupColumns[0]}=${a} t=${b}`;
    });
    const order: string[] = [];
    for (const k of keys) if (!order.includes(k)) order.push(k);
    for (const key of order) {
      const idx = keys.map((k, i) => (k === key ? i : -1)).filter((i) => i >= 0);
      const pick = (name: string) => idx.map((i) => column(t, name)[i]);
      series.push(
        ...dataAndTheorySeries(
          key,
          PALETTE[colorIdx++ % PALETTE.length],
          pick(spec.xColumn),
          pick("R_numeric"),
          pick("R_stderr"),
          pick("R_theory"),
        ),
      );
    }
  }
  const xs = series.flatMap((s) => s.points.map((p) => p.x));
  const ys = series.flatMap((s) => s.points.map((p) => p.y));
  return {
    title: spec.title,
    ...SIZE,
    x: axisFromValues(xs, spec.xScale, spec.xLabel),
    y: axisFromValues(ys, "log", "redundancy R"),
    series,
  };
}

function buildBandSpectrum(tables: Table[]): Scene {
  const series: Series[] = [];
  for (const [i, t] of tables.entries()) {
    requireColumns(t, ["omega", "I_numeric", "I_theory"]);
    series.push(
      ...dataAndTheorySeries(
        shortName(t.path),
        PALETTE[i % PALETTE.length],
        column(t, "omega"),
        column(t, "I_numeric"),
        null,
        column(t, "I_theory"),
      ),
    );
  }
  const ys = series.flatMap((s) => s.points.map((p) => p.y));
  return {
    title: "information per band",
    ...SIZE,
    x: axisFromValues(
      series.flatMap((s) => s.points.map((p) => p.x)),
      "linear",
      "band frequency",
    ),
    y: axisFromValues(ys.concat([0]), "linear", "mutual information (nats)"),
    series,
  };
}

export function buildScene(kind: FigureKind, tables: Table[]): Scene {
  if (tables.length === 0) {
    throw new SchemaError("no input files");
  }
  switch (kind) {
    case "pip":
      return buildPip(tables);
    case "redundancy_vs_squeeze":
      return buildRedundancy(tables, {
        xColumn: "s",
        groupColumns: ["delta", "t"],
        xScale: "log",
        xLabel: "initial squeezing s",
        title: "redundancy vs squeezing",
      });
    case "redundancy_vs_delta":
      return buildRedundancy(tables, {
        xColumn: "delta",
        groupColumns: ["s", "t"],
        xScale: "linear",
        xLabel: "information deficit delta",
        title: "redundancy vs deficit",
      });
    case "band_spectrum":
      return buildBandSpectrum(tables);
    default: {
      const never: never = kind;
      throw new SchemaError(`unknown figure kind ${never}`);
    }
  }
}
