/**
 * Explorer state and its pure transitions.
 *
 * The rules that matter live here, DOM-free, so they are directly testable:
 * sliders clamp to admissible ranges and quantize to denominator <= 100;
 * the displayed equation only ever updates from a response whose hash
 * matches the pending one; a notification fires exactly when the canonical
 * string actually changes.
 */

import type { LocusResultJson, SpecJson } from "./api.js";
import { equals, format, quantize, rational, toNumber, type Rational } from "./rational.js";

export interface ExplorerSpec {
  bx: Rational; // B = (bx, 0); A is pinned at the origin
  f1: Rational;
  f2: Rational;
  g: Rational;
  u: Rational;
  v: Rational;
}

export type SliderField = keyof ExplorerSpec;

export interface SliderRange {
  min: number;
  max: number;
}

// admissible ranges: positive bar lengths, B distinct from A
export const SLIDER_RANGES: Record<SliderField, SliderRange> = {
  bx: { min: 1, max: 30 },
  f1: { min: 0.1, max: 15 },
  f2: { min: 0.1, max: 15 },
  g: { min: 0.1, max: 25 },
  u: { min: -2, max: 3 },
  v: { min: -4, max: 4 },
};

export interface Notification {
  equation: string;
  degree: number;
  degenerate: boolean;
}

export interface ExplorerState {
  spec: ExplorerSpec;
  lastEquation: string; // canonical string(s) of the displayed locus, "" before first response
  lastResult: LocusResultJson | null;
  pendingLocusHash: string | null;
  pendingTraceHash: string | null;
  notifications: Notification[];
}

export function defaultSpec(): ExplorerSpec {
  return {
    bx: rational(15),
    f1: rational(11, 2),
    f2: rational(11, 2),
    g: rational(12),
    u: rational(0),
    v: rational(0),
  };
}

export function initialState(spec: ExplorerSpec = defaultSpec()): ExplorerState {
  return {
    spec,
    lastEquation: "",
    lastResult: null,
    pendingLocusHash: null,
    pendingTraceHash: null,
    notifications: [],
  };
}

/** Clamp to the slider's admissible range and quantize to denominator <= 100. */
export function sliderValue(field: SliderField, raw: number): Rational {
  const { min, max } = SLIDER_RANGES[field];
  const clamped = Math.min(max, Math.max(min, raw));
  const q = quantize(clamped);
  // quantization must not escape the range (e.g. 0.1 -> 1/10 stays positive)
  if (toNumber(q) < min) return quantize(min);
  if (toNumber(q) > max) return quantize(max);
  return q;
}

export interface SliderChange {
  state: ExplorerState;
  changed: boolean;
}

export function applySlider(state: ExplorerState, field: SliderField, raw: number): SliderChange {
  const next = sliderValue(field, raw);
  if (equals(state.spec[field], next)) {
    return { state, changed: false };
  }
  return {
    state: { ...state, spec: { ...state.spec, [field]: next } },
    changed: true,
  };
}

/** Wire form of the current spec, shared by /locus and /trace payloads. */
export function specJson(spec: ExplorerSpec): SpecJson {
  return {
    A: ["0", "0"],
    B: [format(spec.bx), "0"],
    f1: format(spec.f1),
    f2: format(spec.f2),
    g: format(spec.g),
    u: format(spec.u),
    v: format(spec.v),
  };
}

/** The equation text shown to the user: backend strings, never reformatted. */
export function equationText(result: LocusResultJson): string {
  return result.generators.map((g) => g.string).join("\n");
}

/**
 * Apply a /locus response. Stale responses (hash mismatch) are dropped; a
 * notification is appended only when the canonical equation text changed.
 */
export function applyLocusResponse(
  state: ExplorerState,
  responseHash: string,
  result: LocusResultJson,
): ExplorerState {
  if (state.pendingLocusHash !== responseHash) {
    return state; // stale
  }
  const text = equationText(result);
  const next: ExplorerState = {
    ...state,
    pendingLocusHash: null,
    lastResult: result,
    lastEquation: text,
  };
  if (text !== state.lastEquation) {
    next.notifications = [
      ...state.notifications,
      { equation: text, degree: result.degree, degenerate: result.degenerate },
    ];
  }
  return next;
}
