/**
 * Client-side recomputation of the scale-normalized residual, from the terms
 * array of a locus response: |p(x,y)| / (sum|coeffs| * max(1,|x|,|y|)^deg).
 * Coefficients arrive as decimal strings that can exceed double range only
 * in pathological cases; Number() is adequate at display precision.
 */

import type { GeneratorJson, TermJson } from "./api.js";

export function evaluateTerms(terms: TermJson[], x: number, y: number): number {
  let total = 0;
  for (const t of terms) {
    total += Number(t.coeff) * Math.pow(x, t.exps[0]) * Math.pow(y, t.exps[1]);
  }
  return total;
}

export function termsDegree(terms: TermJson[]): number {
  let degree = 0;
  for (const t of terms) {
    degree = Math.max(degree, t.exps[0] + t.exps[1]);
  }
  return degree;
}

export function coefficientMass(terms: TermJson[]): number {
  let mass = 0;
  for (const t of terms) {
    mass += Math.abs(Number(t.coeff));
  }
  return mass;
}

export function residual(terms: TermJson[], x: number, y: number): number {
  const value = Math.abs(evaluateTerms(terms, x, y));
  const scale = Math.pow(Math.max(1, Math.abs(x), Math.abs(y)), termsDegree(terms));
  return value / (coefficientMass(terms) * scale);
}

/** Worst residual of a point cloud against every generator. */
export function worstResidual(
  generators: GeneratorJson[],
  points: Array<[number, number]>,
): number {
  let worst = 0;
  for (const gen of generators) {
    for (const [x, y] of points) {
      worst = Math.max(worst, residual(gen.terms, x, y));
    }
  }
  return worst;
}
