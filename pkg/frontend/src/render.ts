/** Canvas drawing: linkage skeleton, traced curve, implicit-contour overlay. */

import type { LocusResultJson } from "./api.js";
import { marchingSquares, type Segment } from "./marching.js";
import { evaluateTerms } from "./residual.js";
import type { TracePose } from "./tracecsv.js";

export interface Viewport {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

/** World window covering pivots and curve with a margin, aspect-corrected. */
export function fitViewport(
  points: Array<[number, number]>,
  width: number,
  height: number,
  margin = 0.15,
): Viewport {
  let xMin = Infinity, xMax = -Infinity, yMin = Infinity, yMax = -Infinity;
  for (const [x, y] of points) {
    if (!Number.isFinite(x) || !Number.isFinite(y)) continue;
    xMin = Math.min(xMin, x); xMax = Math.max(xMax, x);
    yMin = Math.min(yMin, y); yMax = Math.max(yMax, y);
  }
  if (!Number.isFinite(xMin)) {
    return { xMin: -10, xMax: 10, yMin: -10, yMax: 10 };
  }
  let spanX = (xMax - xMin) || 1;
  let spanY = (yMax - yMin) || 1;
  spanX *= 1 + 2 * margin;
  spanY *= 1 + 2 * margin;
  const cx = (xMin + xMax) / 2;
  const cy = (yMin + yMax) / 2;
  // match the canvas aspect ratio so circles stay circular
  const aspect = width / height;
  if (spanX / spanY < aspect) spanX = spanY * aspect;
  else spanY = spanX / aspect;
  return { xMin: cx - spanX / 2, xMax: cx + spanX / 2, yMin: cy - spanY / 2, yMax: cy + spanY / 2 };
}

export class Scene {
  constructor(
    private ctx: CanvasRenderingContext2D,
    private view: Viewport,
    private width: number,
    private height: number,
  ) {}

  toScreen(x: number, y: number): [number, number] {
    const sx = ((x - this.view.xMin) / (this.view.xMax - this.view.xMin)) * this.width;
    const sy = this.height - ((y - this.view.yMin) / (this.view.yMax - this.view.yMin)) * this.height;
    return [sx, sy];
  }

  clear(): void {
    this.ctx.clearRect(0, 0, this.width, this.height);
  }

  polyline(points: Array<[number, number]>, color: string, lineWidth = 1.5): void {
    if (points.length < 2) return;
    const ctx = this.ctx;
    ctx.strokeStyle = color;
    ctx.lineWidth = lineWidth;
    ctx.beginPath();
    points.forEach(([x, y], i) => {
      const [sx, sy] = this.toScreen(x, y);
      if (i === 0) ctx.moveTo(sx, sy);
      else ctx.lineTo(sx, sy);
    });
    ctx.stroke();
  }

  segments(segs: Segment[], color: string, lineWidth = 1.5): void {
    const ctx = this.ctx;
    ctx.strokeStyle = color;
    ctx.lineWidth = lineWidth;
    ctx.beginPath();
    for (const [p, q] of segs) {
      const [px, py] = this.toScreen(p[0], p[1]);
      const [qx, qy] = this.toScreen(q[0], q[1]);
      ctx.moveTo(px, py);
      ctx.lineTo(qx, qy);
    }
    ctx.stroke();
  }

  dot(x: number, y: number, radius: number, color: string, label?: string): void {
    const [sx, sy] = this.toScreen(x, y);
    const ctx = this.ctx;
    ctx.fillStyle = color;
    ctx.beginPath();
    ctx.arc(sx, sy, radius, 0, 2 * Math.PI);
    ctx.fill();
    if (label) {
      ctx.fillStyle = "#333";
      ctx.font = "13px sans-serif";
      ctx.fillText(label, sx + radius + 3, sy - radius - 3);
    }
  }

  bar(a: [number, number], b: [number, number], color: string): void {
    this.polyline([a, b], color, 3);
  }
}

export interface DrawInput {
  canvas: HTMLCanvasElement;
  pivots: { A: [number, number]; B: [number, number] };
  pose: TracePose | null;
  tracePoints: Array<[number, number]>;
  locus: LocusResultJson | null;
}

export function contourSegments(result: LocusResultJson, view: Viewport): Segment[] {
  const segs: Segment[] = [];
  for (const gen of result.generators) {
    segs.push(
      ...marchingSquares((x, y) => evaluateTerms(gen.terms, x, y),
        view.xMin, view.xMax, view.yMin, view.yMax),
    );
  }
  return segs;
}

export function draw(input: DrawInput): void {
  const { canvas, pivots, pose, tracePoints, locus } = input;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const anchors: Array<[number, number]> = [pivots.A, pivots.B, ...tracePoints];
  if (pose) anchors.push(pose.E, pose.H, pose.M);
  const view = fitViewport(anchors, canvas.width, canvas.height);
  const scene = new Scene(ctx, view, canvas.width, canvas.height);
  scene.clear();

  if (locus && !locus.degenerate) {
    scene.segments(contourSegments(locus, view), "#8bb8e8");
  }
  scene.polyline(tracePoints, "#e39a3b");

  scene.dot(pivots.A[0], pivots.A[1], 5, "#444", "A");
  scene.dot(pivots.B[0], pivots.B[1], 5, "#444", "B");
  if (pose) {
    scene.bar(pivots.A, pose.E, "#666");
    scene.bar(pose.E, pose.H, "#2c7a4b");
    scene.bar(pose.H, pivots.B, "#666");
    scene.polyline([pose.E, pose.M], "#2c7a4b", 1);
    scene.polyline([pose.H, pose.M], "#2c7a4b", 1);
    scene.dot(pose.E[0], pose.E[1], 4, "#2c7a4b", "E");
    scene.dot(pose.H[0], pose.H[1], 4, "#2c7a4b", "H");
    scene.dot(pose.M[0], pose.M[1], 5, "#c0392b", "M");
  }
}
