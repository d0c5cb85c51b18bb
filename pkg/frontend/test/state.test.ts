/**
 * Notification contract: changing u from 0 to 1/2 fires exactly one
 * equation-change notification whose text byte-matches the backend /locus
 * response; no-op slider moves and stale responses fire none.
 */

import { describe, expect, it } from "vitest";

import { sha256Hex } from "../src/api.js";
import { rational, toNumber } from "../src/rational.js";
import {
  applyLocusResponse,
  applySlider,
  defaultSpec,
  equationText,
  initialState,
  sliderValue,
  specJson,
  SLIDER_RANGES,
} from "../src/state.js";
import { locusCircle, locusGeneric } from "./fixtures.js";

describe("notification contract", () => {
  it("fires exactly once for u: 0 -> 1/2, byte-matching the backend string", () => {
    // initial load at u = 0 (the circle locus)
    let state = initialState();
    state = { ...state, pendingLocusHash: locusCircle.request_hash };
    state = applyLocusResponse(state, locusCircle.request_hash, locusCircle.result);
    const afterLoad = state.notifications.length;
    expect(state.lastEquation).toBe("4*x^2 + 4*y^2 - 121");

    // slider change u: 0 -> 1/2
    const move = applySlider(state, "u", 0.5);
    expect(move.changed).toBe(true);
    state = move.state;
    expect(toNumber(state.spec.u)).toBe(0.5);

    const change2 = applySlider(state, "v", 2);
    state = change2.state;
    expect(specJson(state.spec)).toEqual({
      A: ["0", "0"], B: ["15", "0"], f1: "11/2", f2: "11/2", g: "12",
      u: "1/2", v: "2",
    });

    state = { ...state, pendingLocusHash: locusGeneric.request_hash };
    state = applyLocusResponse(state, locusGeneric.request_hash, locusGeneric.result);

    expect(state.notifications.length).toBe(afterLoad + 1);
    const note = state.notifications[state.notifications.length - 1];
    // displayed string is byte-equal to the backend response, unreformatted
    expect(note.equation).toBe(locusGeneric.result.generators[0].string);
    expect(state.lastEquation).toBe(equationText(locusGeneric.result));
    expect(note.degree).toBe(6);
  });

  it("fires nothing on a no-op slider move", () => {
    let state = initialState();
    const before = state;
    const move = applySlider(state, "u", toNumber(state.spec.u));
    expect(move.changed).toBe(false);
    expect(move.state).toBe(before); // no state churn, no request scheduled
  });

  it("fires nothing when the same canonical string arrives again", () => {
    let state = initialState();
    state = { ...state, pendingLocusHash: "h1" };
    state = applyLocusResponse(state, "h1", locusCircle.result);
    const count = state.notifications.length;
    state = { ...state, pendingLocusHash: "h2" };
    state = applyLocusResponse(state, "h2", locusCircle.result);
    expect(state.notifications.length).toBe(count);
    expect(state.lastEquation).toBe("4*x^2 + 4*y^2 - 121");
  });

  it("drops stale responses by hash mismatch", () => {
    let state = initialState();
    state = { ...state, pendingLocusHash: "newer-request" };
    const next = applyLocusResponse(state, "older-request", locusGeneric.result);
    expect(next).toBe(state);
    expect(next.lastEquation).toBe("");
    expect(next.notifications.length).toBe(0);
  });

  it("reproduces the service's request hash from the exact body bytes", async () => {
    // the captured request was {"kind":…,"payload":<spec>,"deadline_ms":60000}
    const body = JSON.stringify({
      kind: "locus",
      payload: specJson({ ...defaultSpec(), u: rational(1, 2), v: rational(2) }),
      deadline_ms: 60000,
    });
    expect(await sha256Hex(body)).toBe(locusGeneric.request_hash);
  });
});

describe("slider invariants", () => {
  it("clamps to admissible ranges (positive lengths, B distinct from A)", () => {
    expect(toNumber(sliderValue("f1", -3))).toBe(SLIDER_RANGES.f1.min);
    expect(toNumber(sliderValue("g", 1e9))).toBe(SLIDER_RANGES.g.max);
    expect(toNumber(sliderValue("bx", 0))).toBe(SLIDER_RANGES.bx.min);
  });

  it("quantizes to rationals with denominator <= 100", () => {
    for (const raw of [0.123456, 7.77, 3.14159, -1.005]) {
      const q = sliderValue("u", raw);
      expect(q.den).toBeLessThanOrEqual(100);
      expect(Math.abs(toNumber(q) - Math.min(3, Math.max(-2, raw)))).toBeLessThanOrEqual(0.005);
    }
    expect(sliderValue("u", 0.5)).toEqual(rational(1, 2));
  });
});
