/**
 * Trace overlay contract: every traced point satisfies the displayed
 * equation's terms array with residual <= 1e-5, recomputed client-side.
 */

import { describe, expect, it } from "vitest";

import { coefficientMass, residual, termsDegree, worstResidual } from "../src/residual.js";
import { parseTraceCsv } from "../src/tracecsv.js";
import { locusCircle, locusGeneric, traceGeneric } from "./fixtures.js";

describe("trace overlay residuals", () => {
  it("traced coupler points satisfy the sextic terms to 1e-5", () => {
    const parsed = parseTraceCsv(traceGeneric.result.csv);
    expect(parsed.poses.length).toBeGreaterThan(300);
    const points = parsed.poses.map((p) => p.M);
    const worst = worstResidual(locusGeneric.result.generators, points);
    expect(worst).toBeLessThanOrEqual(1e-5);
  });

  it("residual formula matches the documented normalization", () => {
    const circle = locusCircle.result.generators[0].terms;
    // 4x^2 + 4y^2 - 121 at the origin: 121 / (129 * 1)
    expect(residual(circle, 0, 0)).toBeCloseTo(121 / 129, 12);
    expect(termsDegree(circle)).toBe(2);
    expect(coefficientMass(circle)).toBe(129);
    // a point on the circle: radius 11/2
    expect(residual(circle, 5.5, 0)).toBeLessThanOrEqual(1e-15);
  });
});
