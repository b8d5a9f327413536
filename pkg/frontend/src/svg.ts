/**
 * SVG backend.  Emits a standalone <svg> string; data markers carry
 * data-x / data-y attributes with the underlying values so tests (and
 * curious humans) can read the plotted numbers back out of the file.
 */

import { MARGIN, Scene, formatTick, scalePos, ticksFor } from "./scene.js";

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

const n = (v: number) => +v.toFixed(2);

export function sceneToSvg(scene: Scene): string {
  const { width: W, height: H } = scene;
  const x0 = MARGIN.left,
    x1 = W - MARGIN.right,
    y0 = H - MARGIN.bottom,
    y1 = MARGIN.top;
  const px = (v: number) => scalePos(scene.x, v, x0, x1);
  const py = (v: number) => scalePos(scene.y, v, y0, y1);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" ` +
      `viewBox="0 0 ${W} ${H}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${W}" height="${H}" fill="white"/>`);
  parts.push(`<text x="${W / 2}" y="18" font-size="13" text-anchor="middle">${esc(scene.title)}</text>`);

  // grid + ticks
  for (const t of ticksFor(scene.x)) {
    if (t < scene.x.min - 1e-12 || t > scene.x.max * (1 + 1e-12)) continue;
    const gx = n(px(t));
    parts.push(`<line x1="${gx}" y1="${y0}" x2="${gx}" y2="${y1}" stroke="#dddddd" stroke-width="0.6"/>`);
    parts.push(`<line x1="${gx}" y1="${y0}" x2="${gx}" y2="${y0 + 4}" stroke="black"/>`);
    parts.push(
      `<text x="${gx}" y="${y0 + 16}" font-size="10" text-anchor="middle">${esc(formatTick(t, scene.x.scale))}</text>`,
    );
  }
  for (const t of ticksFor(scene.y)) {
    if (t < scene.y.min - 1e-12 || t > scene.y.max * (1 + 1e-12)) continue;
    const gy = n(py(t));
    parts.push(`<line x1="${x0}" y1="${gy}" x2="${x1}" y2="${gy}" stroke="#dddddd" stroke-width="0.6"/>`);
    parts.push(`<line x1="${x0 - 4}" y1="${gy}" x2="${x0}" y2="${gy}" stroke="black"/>`);
    parts.push(
      `<text x="${x0 - 7}" y="${gy + 3.5}" font-size="10" text-anchor="end">${esc(formatTick(t, scene.y.scale))}</text>`,
    );
  }
  // frame and axis labels
  parts.push(`<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" fill="none" stroke="black"/>`);
  parts.push(
    `<text x="${(x0 + x1) / 2}" y="${H - 10}" font-size="12" text-anchor="middle">${esc(scene.x.label)}</text>`,
  );
  parts.push(
    `<text x="16" y="${(y0 + y1) / 2}" font-size="12" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${(y0 + y1) / 2})">${esc(scene.y.label)}</text>`,
  );

  // series: theory lines under data markers
  for (const s of scene.series) {
    if (!s.line) continue;
    const pts = s.points.map((p) => `${n(px(p.x))},${n(py(p.y))}`).join(" ");
    parts.push(
      `<polyline fill="none" stroke="${s.color}" stroke-width="1.4" points="${pts}" data-series="${esc(s.label)}"/>`,
    );
  }
  for (const s of scene.series) {
    if (!s.markers) continue;
    for (const p of s.points) {
      const cx = n(px(p.x)),
        cy = n(py(p.y));
      if (p.err !== undefined && p.err > 0) {
        const lo = n(py(Math.max(p.y - p.err, scene.y.scale === "log" ? scene.y.min : -Infinity)));
        const hi = n(py(p.y + p.err));
        parts.push(`<line x1="${cx}" y1="${lo}" x2="${cx}" y2="${hi}" stroke="${s.color}" stroke-width="1"/>`);
      }
      parts.push(
        `<circle cx="${cx}" cy="${cy}" r="2.6" fill="${s.color}" data-series="${esc(s.label)}" ` +
          `data-x="${p.x}" data-y="${p.y}"/>`,
      );
    }
  }

  // legend
  let ly = y1 + 14;
  for (const s of scene.series) {
    if (!s.label) continue;
    parts.push(`<circle cx="${x1 - 150}" cy="${ly - 3}" r="3" fill="${s.color}"/>`);
    parts.push(`<text x="${x1 - 142}" y="${ly}" font-size="10">${esc(s.label)}</text>`);
    ly += 14;
  }
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
