/**
 * Slider-side rational arithmetic. Sliders quantize to fractions with
 * denominator <= 100 so every value round-trips exactly through the
 * backend's "p/q" JSON encoding and elimination stays fast.
 */

export interface Rational {
  num: number;
  den: number; // always >= 1
}

export const MAX_SLIDER_DENOMINATOR = 100;

function gcd(a: number, b: number): number {
  a = Math.abs(a);
  b = Math.abs(b);
  while (b !== 0) {
    [a, b] = [b, a % b];
  }
  return a === 0 ? 1 : a;
}

export function rational(num: number, den = 1): Rational {
  if (!Number.isInteger(num) || !Number.isInteger(den) || den === 0) {
    throw new Error(`not a rational: ${num}/${den}`);
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const g = gcd(num, den);
  return { num: num / g, den: den / g };
}

/** Nearest fraction with denominator MAX_SLIDER_DENOMINATOR, reduced. */
export function quantize(value: number): Rational {
  return rational(Math.round(value * MAX_SLIDER_DENOMINATOR), MAX_SLIDER_DENOMINATOR);
}

export function toNumber(r: Rational): number {
  return r.num / r.den;
}

/** Backend wire format: "p/q", or plain "p" for integers. */
export function format(r: Rational): string {
  return r.den === 1 ? String(r.num) : `${r.num}/${r.den}`;
}

export function parse(text: string): Rational {
  const parts = text.trim().split("/");
  if (parts.length === 1) {
    return rational(parseIntStrict(parts[0]));
  }
  if (parts.length === 2) {
    return rational(parseIntStrict(parts[0]), parseIntStrict(parts[1]));
  }
  throw new Error(`not a rational: ${text}`);
}

function parseIntStrict(text: string): number {
  if (!/^-?\d+$/.test(text.trim())) {
    throw new Error(`not an integer: ${text}`);
  }
  return parseInt(text, 10);
}

export function equals(a: Rational, b: Rational): boolean {
  return a.num === b.num && a.den === b.den;
}

export function isZero(r: Rational): boolean {
  return r.num === 0;
}
