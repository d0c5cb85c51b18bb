/**
 * Marching squares: extract line segments of f(x, y) = 0 over a world-space
 * rectangle. Returns raw segments; the renderer draws them directly, so no
 * polyline stitching is needed.
 */

export type Point = [number, number];
export type Segment = [Point, Point];

export interface GridOptions {
  cols?: number;
  rows?: number;
}

// for each 4-bit corner-sign case, the cell edges crossed (0=left, 1=top,
// 2=right, 3=bottom); the two ambiguous saddles emit both segment pairs
const EDGE_TABLE: number[][] = [
  [], [0, 3], [3, 2], [0, 2], [1, 2], [0, 1, 2, 3], [1, 3], [0, 1],
  [0, 1], [1, 3], [0, 1, 2, 3], [1, 2], [0, 2], [3, 2], [0, 3], [],
];

export function marchingSquares(
  fn: (x: number, y: number) => number,
  xMin: number,
  xMax: number,
  yMin: number,
  yMax: number,
  options: GridOptions = {},
): Segment[] {
  const cols = options.cols ?? 160;
  const rows = options.rows ?? 160;
  const dx = (xMax - xMin) / cols;
  const dy = (yMax - yMin) / rows;

  const grid: number[][] = [];
  for (let j = 0; j <= rows; j++) {
    const row: number[] = [];
    const y = yMin + j * dy;
    for (let i = 0; i <= cols; i++) {
      const v = fn(xMin + i * dx, y);
      row.push(Number.isFinite(v) ? v : NaN);
    }
    grid.push(row);
  }

  const segments: Segment[] = [];

  const corner = (i: number, j: number): Point => [xMin + i * dx, yMin + j * dy];

  function edgePoint(i: number, j: number, edge: number): Point | null {
    let a: Point, b: Point, va: number, vb: number;
    if (edge === 0) {
      a = corner(i, j); b = corner(i, j + 1);
      va = grid[j][i]; vb = grid[j + 1][i];
    } else if (edge === 1) {
      a = corner(i, j + 1); b = corner(i + 1, j + 1);
      va = grid[j + 1][i]; vb = grid[j + 1][i + 1];
    } else if (edge === 2) {
      a = corner(i + 1, j + 1); b = corner(i + 1, j);
      va = grid[j + 1][i + 1]; vb = grid[j][i + 1];
    } else {
      a = corner(i + 1, j); b = corner(i, j);
      va = grid[j][i + 1]; vb = grid[j][i];
    }
    if (!Number.isFinite(va) || !Number.isFinite(vb) || va === vb) return null;
    const t = va / (va - vb);
    if (!Number.isFinite(t) || t < 0 || t > 1) return null;
    return [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
  }

  for (let j = 0; j < rows; j++) {
    for (let i = 0; i < cols; i++) {
      const v0 = grid[j][i];
      const v1 = grid[j][i + 1];
      const v2 = grid[j + 1][i + 1];
      const v3 = grid[j + 1][i];
      if (![v0, v1, v2, v3].every(Number.isFinite)) continue;
      // bits: 1 = bottom-left, 2 = bottom-right, 4 = top-right, 8 = top-left
      let idx = 0;
      if (v0 < 0) idx |= 1;
      if (v1 < 0) idx |= 2;
      if (v2 < 0) idx |= 4;
      if (v3 < 0) idx |= 8;
      const edges = EDGE_TABLE[idx];
      for (let k = 0; k + 1 < edges.length; k += 2) {
        const p = edgePoint(i, j, edges[k]);
        const q = edgePoint(i, j, edges[k + 1]);
        if (p && q) segments.push([p, q]);
      }
    }
  }
  return segments;
}
