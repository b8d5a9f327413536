/**
 * Backend-independent description of one figure: two axes and a list of
 * series, each drawn as markers (with optional error bars) and/or a line.
 * The SVG and PNG backends both consume this.
 */

export type ScaleKind = "linear" | "log";

export interface Axis {
  scale: ScaleKind;
  label: string;
  min: number;
  max: number;
}

export interface Point {
  x: number;
  y: number;
  err?: number;
}

export interface Series {
  label: string;
  color: string;
  markers: boolean;
  line: boolean;
  points: Point[];
}

export interface Scene {
  title: string;
  width: number;
  height: number;
  x: Axis;
  y: Axis;
  series: Series[];
}

export const PALETTE = ["#c0392b", "#27ae60", "#2563b0", "#8e44ad", "#b7950b", "#16a085"];

export const MARGIN = { left: 64, right: 16, top: 28, bottom: 46 };

export function scalePos(axis: Axis, v: number, lo: number, hi: number): number {
  const t =
    axis.scale === "log"
      ? (Math.log(v) - Math.log(axis.min)) / (Math.log(axis.max) - Math.log(axis.min))
      : (v - axis.min) / (axis.max - axis.min);
  return lo + t * (hi - lo);
}

/** Round (1, 2, 5) x 10^k ticks for linear axes. */
export function linearTicks(min: number, max: number, target = 6): number[] {
  const span = max - min;
  if (!(span > 0)) return [min];
  const step0 = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= step0) {
      step = m * mag;
      break;
    }
  }
  const ticks: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

/** Decade ticks for log axes. */
export function logTicks(min: number, max: number): number[] {
  const ticks: number[] = [];
  const klo = Math.ceil(Math.log10(min) - 1e-9);
  const khi = Math.floor(Math.log10(max) + 1e-9);
  for (let k = klo; k <= khi; k++) ticks.push(Math.pow(10, k));
  if (ticks.length === 0) ticks.push(min, max);
  return ticks;
}

export function ticksFor(axis: Axis): number[] {
  return axis.scale === "log" ? logTicks(axis.min, axis.max) : linearTicks(axis.min, axis.max);
}

export function formatTick(v: number, scale: ScaleKind): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (scale === "log" || a >= 1e4 || a < 1e-3) {
    const k = Math.round(Math.log10(a));
    if (Math.abs(a - Math.pow(10, k)) < 1e-9 * a) {
      return `1e${k}`;
    }
    return v.toExponential(1);
  }
  const s = v.toPrecision(4);
  return s.includes(".") ? s.replace(/\.?0+$/, "") : s;
}

/** Pad a [lo, hi] data range outward by 5% (multiplicative for log). */
export function padRange(lo: number, hi: number, scale: ScaleKind): [number, number] {
  if (scale === "log") {
    const f = Math.pow(hi / lo, 0.05);
    return [lo / f, hi * f];
  }
  const pad = (hi - lo || Math.abs(hi) || 1) * 0.05;
  return [lo - pad, hi + pad];
}
