/**
 * Software RGBA canvas plus a PNG encoder (8-bit RGBA, filter 0,
 * node:zlib deflate).  Just enough drawing for axes, polylines, markers
 * and stroke-font text.
 */

import { deflateSync } from "node:zlib";

import { GLYPH_ADVANCE, GLYPH_HEIGHT, glyph, textWidth } from "./font.js";

export type Color = [number, number, number];

export function parseColor(spec: string): Color {
  const m = /^#([0-9a-f]{6})$/i.exec(spec);
  if (!m) return [0, 0, 0];
  const v = parseInt(m[1], 16);
  return [(v >> 16) & 255, (v >> 8) & 255, v & 255];
}

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly pixels: Uint8ClampedArray;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.pixels = new Uint8ClampedArray(width * height * 4);
    this.fill([255, 255, 255]);
  }

  fill(c: Color): void {
    for (let i = 0; i < this.pixels.length; i += 4) {
      this.pixels[i] = c[0];
      this.pixels[i + 1] = c[1];
      this.pixels[i + 2] = c[2];
      this.pixels[i + 3] = 255;
    }
  }

  set(x: number, y: number, c: Color): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = (y * this.width + x) * 4;
    this.pixels[i] = c[0];
    this.pixels[i + 1] = c[1];
    this.pixels[i + 2] = c[2];
    this.pixels[i + 3] = 255;
  }

  get(x: number, y: number): Color {
    const i = (y * this.width + x) * 4;
    return [this.pixels[i], this.pixels[i + 1], this.pixels[i + 2]];
  }

  /** Stroke a segment by dense sampling; width in whole pixels. */
  line(x0: number, y0: number, x1: number, y1: number, c: Color, width = 1): void {
    const steps = Math.max(1, Math.ceil(Math.hypot(x1 - x0, y1 - y0) * 2));
    const r = (width - 1) / 2;
    for (let k = 0; k <= steps; k++) {
      const t = k / steps;
      const x = x0 + t * (x1 - x0);
      const y = y0 + t * (y1 - y0);
      if (r <= 0) {
        this.set(x, y, c);
      } else {
        for (let dx = -Math.ceil(r); dx <= Math.ceil(r); dx++)
          for (let dy = -Math.ceil(r); dy <= Math.ceil(r); dy++)
            if (dx * dx + dy * dy <= r * r + 0.26) this.set(x + dx, y + dy, c);
      }
    }
  }

  fillCircle(cx: number, cy: number, radius: number, c: Color): void {
    const r = Math.ceil(radius);
    for (let dx = -r; dx <= r; dx++)
      for (let dy = -r; dy <= r; dy++)
        if (dx * dx + dy * dy <= radius * radius + 0.26) this.set(cx + dx, cy + dy, c);
  }

  rect(x0: number, y0: number, x1: number, y1: number, c: Color): void {
    this.line(x0, y0, x1, y0, c);
    this.line(x1, y0, x1, y1, c);
    this.line(x1, y1, x0, y1, c);
    this.line(x0, y1, x0, y0, c);
  }

  /**
   * Draw text with the stroke font; (x, y) is the baseline start.
   * rotate90 turns the run counterclockwise for y-axis labels.
   */
  text(
    str: string,
    x: number,
    y: number,
    size: number,
    c: Color,
    opts: { anchor?: "start" | "middle" | "end"; rotate90?: boolean } = {},
  ): void {
    const scale = size / GLYPH_HEIGHT;
    const w = textWidth(str, size);
    let shift = 0;
    if (opts.anchor === "middle") shift = -w / 2;
    if (opts.anchor === "end") shift = -w;
    let penX = shift;
    for (const ch of str) {
      for (const stroke of glyph(ch)) {
        for (let i = 0; i + 1 < stroke.length; i++) {
          // glyph y is up; canvas y is down
          let ax = penX + stroke[i][0] * scale;
          let ay = -stroke[i][1] * scale;
          let bx = penX + stroke[i + 1][0] * scale;
          let by = -stroke[i + 1][1] * scale;
          if (opts.rotate90) {
            [ax, ay] = [ay, -ax];
            [bx, by] = [by, -bx];
          }
          this.line(x + ax, y + ay, x + bx, y + by, c);
        }
      }
      penX += GLYPH_ADVANCE * scale;
    }
  }
}

const CRC_TABLE = (() => {
  const table = new Uint32Array(256);
  for (let n = 0; n < 256; n++) {
    let c = n;
    for (let k = 0; k < 8; k++) c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
    table[n] = c >>> 0;
  }
  return table;
})();

export function crc32(data: Uint8Array): number {
  let c = 0xffffffff;
  for (let i = 0; i < data.length; i++) c = CRC_TABLE[(c ^ data[i]) & 0xff] ^ (c >>> 8);
  return (c ^ 0xffffffff) >>> 0;
}

function chunk(type: string, data: Uint8Array): Buffer {
  const out = Buffer.alloc(12 + data.length);
  out.writeUInt32BE(data.length, 0);
  out.write(type, 4, "ascii");
  Buffer.from(data).copy(out, 8);
  const body = out.subarray(4, 8 + data.length);
  out.writeUInt32BE(crc32(body), 8 + data.length);
  return out;
}

export function encodePng(canvas: Canvas): Buffer {
  const { width, height, pixels } = canvas;
  const ihdr = Buffer.alloc(13);
  ihdr.writeUInt32BE(width, 0);
  ihdr.writeUInt32BE(height, 4);
  ihdr[8] = 8; // bit depth
  ihdr[9] = 6; // RGBA
  const raw = Buffer.alloc(height * (1 + width * 4));
  for (let y = 0; y < height; y++) {
    const rowStart = y * (1 + width * 4);
    raw[rowStart] = 0; // filter: none
    Buffer.from(pixels.buffer, y * width * 4, width * 4).copy(raw, rowStart + 1);
  }
  return Buffer.concat([
    Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]),
    chunk("IHDR", ihdr),
    chunk("IDAT", deflateSync(raw, { level: 9 })),
    chunk("IEND", new Uint8Array(0)),
  ]);
}
