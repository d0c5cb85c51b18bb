import { describe, expect, it } from "vitest";

import { equals, format, parse, quantize, rational, toNumber } from "../src/rational.js";

describe("slider rationals", () => {
  it("normalizes sign and content", () => {
    expect(rational(2, 4)).toEqual({ num: 1, den: 2 });
    expect(rational(3, -6)).toEqual({ num: -1, den: 2 });
    expect(rational(0, 7)).toEqual({ num: 0, den: 1 });
  });

  it("round-trips the backend wire format", () => {
    expect(format(rational(11, 2))).toBe("11/2");
    expect(format(rational(12))).toBe("12");
    expect(parse("11/2")).toEqual(rational(11, 2));
    expect(parse("-3/4")).toEqual(rational(-3, 4));
    expect(parse(" 15 ")).toEqual(rational(15));
    expect(() => parse("1.5")).toThrow();
    expect(() => parse("1/2/3")).toThrow();
  });

  it("quantizes to hundredths and reduces", () => {
    expect(quantize(0.5)).toEqual(rational(1, 2));
    expect(quantize(5.5)).toEqual(rational(11, 2));
    const q = quantize(0.333333);
    expect(q.den).toBeLessThanOrEqual(100);
    expect(Math.abs(toNumber(q) - 1 / 3)).toBeLessThan(0.005);
  });

  it("compares reduced forms", () => {
    expect(equals(rational(2, 4), rational(1, 2))).toBe(true);
    expect(equals(rational(1, 2), rational(1, 3))).toBe(false);
  });
});
