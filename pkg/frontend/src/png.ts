/**
 * PNG backend: rasterizes a Scene with the software canvas, mirroring
 * the SVG layout.
 */

import { MARGIN, Scene, formatTick, scalePos, ticksFor } from "./scene.js";
import { Canvas, encodePng, parseColor } from "./raster.js";

const BLACK: [number, number, number] = [0, 0, 0];
const GRID: [number, number, number] = [221, 221, 221];

export function sceneToPng(scene: Scene): Buffer {
  const { width: W, height: H } = scene;
  const cv = new Canvas(W, H);
  const x0 = MARGIN.left,
    x1 = W - MARGIN.right,
    y0 = H - MARGIN.bottom,
    y1 = MARGIN.top;
  const px = (v: number) => scalePos(scene.x, v, x0, x1);
  const py = (v: number) => scalePos(scene.y, v, y0, y1);

  cv.text(scene.title, W / 2, 18, 11, BLACK, { anchor: "middle" });

  for (const t of ticksFor(scene.x)) {
    if (t < scene.x.min - 1e-12 || t > scene.x.max * (1 + 1e-12)) continue;
    const gx = px(t);
    cv.line(gx, y0, gx, y1, GRID);
    cv.line(gx, y0, gx, y0 + 4, BLACK);
    cv.text(formatTick(t, scene.x.scale), gx, y0 + 15, 8, BLACK, { anchor: "middle" });
  }
  for (const t of ticksFor(scene.y)) {
    if (t < scene.y.min - 1e-12 || t > scene.y.max * (1 + 1e-12)) continue;
    const gy = py(t);
    cv.line(x0, gy, x1, gy, GRID);
    cv.line(x0 - 4, gy, x0, gy, BLACK);
    cv.text(formatTick(t, scene.y.scale), x0 - 7, gy + 3, 8, BLACK, { anchor: "end" });
  }
  cv.rect(x0, y1, x1, y0, BLACK);
  cv.text(scene.x.label, (x0 + x1) / 2, H - 8, 9, BLACK, { anchor: "middle" });
  cv.text(scene.y.label, 18, (y0 + y1) / 2, 9, BLACK, { anchor: "middle", rotate90: true });

  for (const s of scene.series) {
    if (!s.line) continue;
    const c = parseColor(s.color);
    for (let i = 0; i + 1 < s.points.length; i++) {
      cv.line(
        px(s.points[i].x),
        py(s.points[i].y),
        px(s.points[i + 1].x),
        py(s.points[i + 1].y),
        c,
        2,
      );
    }
  }
  for (const s of scene.series) {
    if (!s.markers) continue;
    const c = parseColor(s.color);
    for (const p of s.points) {
      if (p.err !== undefined && p.err > 0) {
        const lo = py(Math.max(p.y - p.err, scene.y.scale === "log" ? scene.y.min : -Infinity));
        const hi = py(p.y + p.err);
        cv.line(px(p.x), lo, px(p.x), hi, c);
      }
      cv.fillCircle(px(p.x), py(p.y), 2.6, c);
    }
  }

  let ly = y1 + 14;
  for (const s of scene.series) {
    if (!s.label) continue;
    const c = parseColor(s.color);
    cv.fillCircle(x1 - 150, ly - 3, 3, c);
    cv.text(s.label, x1 - 142, ly, 8, BLACK);
    ly += 14;
  }
  return encodePng(cv);
}
