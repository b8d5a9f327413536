/**
 * Tiny stroke font for the raster backend: each glyph is a list of
 * polylines on a 4-wide, 8-tall grid (y up).  Enough coverage for
 * numeric tick labels and plain-ASCII axis titles; letters render as
 * small caps.
 */

export type Stroke = [number, number][];

const G: Record<string, Stroke[]> = {
  "0": [[[0, 0], [4, 0], [4, 8], [0, 8], [0, 0]], [[0, 0], [4, 8]]],
  "1": [[[1, 6], [2, 8], [2, 0]], [[1, 0], [3, 0]]],
  "2": [[[0, 8], [4, 8], [4, 4], [0, 4], [0, 0], [4, 0]]],
  "3": [[[0, 8], [4, 8], [4, 0], [0, 0]], [[1, 4], [4, 4]]],
  "4": [[[0, 8], [0, 4], [4, 4]], [[4, 8], [4, 0]]],
  "5": [[[4, 8], [0, 8], [0, 4], [4, 4], [4, 0], [0, 0]]],
  "6": [[[4, 8], [0, 8], [0, 0], [4, 0], [4, 4], [0, 4]]],
  "7": [[[0, 8], [4, 8], [2, 0]]],
  "8": [[[0, 0], [4, 0], [4, 8], [0, 8], [0, 0]], [[0, 4], [4, 4]]],
  "9": [[[0, 0], [4, 0], [4, 8], [0, 8], [0, 4], [4, 4]]],
  ".": [[[1, 0], [2, 0], [2, 1], [1, 1], [1, 0]]],
  ",": [[[2, 1], [1, 0]]],
  "-": [[[0, 4], [4, 4]]],
  "+": [[[0, 4], [4, 4]], [[2, 2], [2, 6]]],
  "/": [[[0, 0], [4, 8]]],
  "=": [[[0, 3], [4, 3]], [[0, 5], [4, 5]]],
  "(": [[[3, 8], [1, 6], [1, 2], [3, 0]]],
  ")": [[[1, 8], [3, 6], [3, 2], [1, 0]]],
  ":": [[[2, 1], [2, 2]], [[2, 5], [2, 6]]],
  " ": [],
  A: [[[0, 0], [2, 8], [4, 0]], [[1, 3], [3, 3]]],
  B: [[[0, 0], [0, 8], [3, 8], [4, 7], [4, 5], [3, 4], [0, 4]], [[3, 4], [4, 3], [4, 1], [3, 0], [0, 0]]],
  C: [[[4, 1], [3, 0], [1, 0], [0, 1], [0, 7], [1, 8], [3, 8], [4, 7]]],
  D: [[[0, 0], [0, 8], [2, 8], [4, 6], [4, 2], [2, 0], [0, 0]]],
  E: [[[4, 0], [0, 0], [0, 8], [4, 8]], [[0, 4], [3, 4]]],
  F: [[[0, 0], [0, 8], [4, 8]], [[0, 4], [3, 4]]],
  G: [[[4, 7], [3, 8], [1, 8], [0, 7], [0, 1], [1, 0], [3, 0], [4, 1], [4, 3], [2, 3]]],
  H: [[[0, 0], [0, 8]], [[4, 0], [4, 8]], [[0, 4], [4, 4]]],
  I: [[[2, 0], [2, 8]], [[1, 0], [3, 0]], [[1, 8], [3, 8]]],
  J: [[[4, 8], [4, 1], [3, 0], [1, 0], [0, 1]]],
  K: [[[0, 0], [0, 8]], [[4, 8], [0, 4], [4, 0]]],
  L: [[[0, 8], [0, 0], [4, 0]]],
  M: [[[0, 0], [0, 8], [2, 4], [4, 8], [4, 0]]],
  N: [[[0, 0], [0, 8], [4, 0], [4, 8]]],
  O: [[[1, 0], [0, 1], [0, 7], [1, 8], [3, 8], [4, 7], [4, 1], [3, 0], [1, 0]]],
  P: [[[0, 0], [0, 8], [3, 8], [4, 7], [4, 5], [3, 4], [0, 4]]],
  Q: [[[1, 0], [0, 1], [0, 7], [1, 8], [3, 8], [4, 7], [4, 1], [3, 0], [1, 0]], [[2, 2], [4, 0]]],
  R: [[[0, 0], [0, 8], [3, 8], [4, 7], [4, 5], [3, 4], [0, 4]], [[1, 4], [4, 0]]],
  S: [[[4, 7], [3, 8], [1, 8], [0, 7], [0, 5], [4, 3], [4, 1], [3, 0], [1, 0], [0, 1]]],
  T: [[[2, 0], [2, 8]], [[0, 8], [4, 8]]],
  U: [[[0, 8], [0, 1], [1, 0], [3, 0], [4, 1], [4, 8]]],
  V: [[[0, 8], [2, 0], [4, 8]]],
  W: [[[0, 8], [1, 0], [2, 5], [3, 0], [4, 8]]],
  X: [[[0, 0], [4, 8]], [[0, 8], [4, 0]]],
  Y: [[[0, 8], [2, 4], [4, 8]], [[2, 4], [2, 0]]],
  Z: [[[0, 8], [4, 8], [0, 0], [4, 0]]],
};

export const GLYPH_WIDTH = 4;
export const GLYPH_HEIGHT = 8;
export const GLYPH_ADVANCE = 6;

export function glyph(ch: string): Stroke[] {
  const up = ch.toUpperCase();
  return G[ch] ?? G[up] ?? G["."];
}

export function textWidth(text: string, size: number): number {
  return (text.length * GLYPH_ADVANCE - (GLYPH_ADVANCE - GLYPH_WIDTH)) * (size / GLYPH_HEIGHT);
}
