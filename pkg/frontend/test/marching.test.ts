import { describe, expect, it } from "vitest";

import { marchingSquares } from "../src/marching.js";
import { evaluateTerms } from "../src/residual.js";
import { locusCircle } from "./fixtures.js";

describe("marching squares", () => {
  it("contours the unit circle accurately", () => {
    const segs = marchingSquares((x, y) => x * x + y * y - 1, -2, 2, -2, 2);
    expect(segs.length).toBeGreaterThan(50);
    let length = 0;
    for (const [p, q] of segs) {
      for (const [x, y] of [p, q]) {
        expect(Math.abs(x * x + y * y - 1)).toBeLessThan(5e-3);
      }
      length += Math.hypot(q[0] - p[0], q[1] - p[1]);
    }
    expect(length).toBeGreaterThan(2 * Math.PI * 0.98);
    expect(length).toBeLessThan(2 * Math.PI * 1.02);
  });

  it("finds nothing when the curve misses the window", () => {
    const segs = marchingSquares((x, y) => x * x + y * y - 1, 5, 6, 5, 6);
    expect(segs.length).toBe(0);
  });

  it("contours a locus response's terms", () => {
    const terms = locusCircle.result.generators[0].terms;
    // 4x^2 + 4y^2 = 121: circle of radius 5.5
    const segs = marchingSquares((x, y) => evaluateTerms(terms, x, y), -8, 8, -8, 8);
    expect(segs.length).toBeGreaterThan(50);
    for (const [p] of segs) {
      expect(Math.hypot(p[0], p[1])).toBeCloseTo(5.5, 1);
    }
  });

  it("skips cells containing non-finite samples", () => {
    const segs = marchingSquares(
      (x, y) => (x < 0 ? NaN : x * x + y * y - 1), -2, 2, -2, 2);
    for (const [p, q] of segs) {
      expect(p[0]).toBeGreaterThanOrEqual(0);
      expect(q[0]).toBeGreaterThanOrEqual(0);
    }
  });
});
