/** Explorer wiring: sliders, animation loop, debounced backend queries. */

import { startJob, type LocusResultJson, type TraceResultJson } from "./api.js";
import { Debouncer } from "./debounce.js";
import { draw } from "./render.js";
import { worstResidual } from "./residual.js";
import { format, toNumber } from "./rational.js";
import {
  applyLocusResponse,
  applySlider,
  initialState,
  specJson,
  SLIDER_RANGES,
  type ExplorerState,
  type SliderField,
} from "./state.js";
import { animationOrder, parseTraceCsv, type TracePose } from "./tracecsv.js";
import { decodeSpecUrl, encodeSpecUrl } from "./url.js";

const API_BASE = (window as { LOCUSFORGE_API?: string }).LOCUSFORGE_API ?? "";

const TERM_COLLAPSE_LIMIT = 30;

let state: ExplorerState = initialState(decodeSpecUrl(window.location.search));
let posesByBranch: { ccw: TracePose[]; cw: TracePose[] } = { ccw: [], cw: [] };
let tracePoints: Array<[number, number]> = [];
let animationIndex = 0;
let animationStep = 1;
let animationRunning = true;

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const equationBox = document.getElementById("equation")!;
const termsBox = document.getElementById("terms")!;
const degreeBadge = document.getElementById("degree")!;
const banner = document.getElementById("banner")!;
const notificationsBox = document.getElementById("notifications")!;
const residualBox = document.getElementById("residual")!;
const debouncer = new Debouncer();

function showBanner(text: string): void {
  banner.textContent = text;
  banner.classList.toggle("hidden", text === "");
}

function renderNotification(equation: string, degree: number, degenerate: boolean): void {
  const toast = document.createElement("div");
  toast.className = "toast";
  toast.title = equation;
  toast.textContent = degenerate
    ? "Locus equation changed (degenerate construction)"
    : `Locus equation changed: degree ${degree}`;
  notificationsBox.appendChild(toast);
  setTimeout(() => toast.remove(), 4000);
}

function renderEquation(): void {
  const result = state.lastResult;
  equationBox.textContent = state.lastEquation || "(no equation yet)";
  degreeBadge.textContent = result ? `degree ${result.degree}` : "";
  termsBox.innerHTML = "";
  if (!result) return;
  const terms = result.generators.flatMap((g) => g.terms);
  const container = document.createElement(terms.length > TERM_COLLAPSE_LIMIT ? "details" : "div");
  if (terms.length > TERM_COLLAPSE_LIMIT) {
    const summary = document.createElement("summary");
    summary.textContent = `${terms.length} terms`;
    container.appendChild(summary);
  }
  for (const t of terms) {
    const span = document.createElement("span");
    span.className = "term";
    const pow = (name: string, e: number) =>
      e === 0 ? "" : e === 1 ? name : `${name}<sup>${e}</sup>`;
    span.innerHTML = `${t.coeff} ${pow("x", t.exps[0])}${pow("y", t.exps[1])}`;
    container.appendChild(span);
  }
  termsBox.appendChild(container);
}

function currentPose(): TracePose | null {
  const arm = posesByBranch.ccw.length ? posesByBranch.ccw : posesByBranch.cw;
  if (!arm.length) return null;
  return arm[Math.min(animationIndex, arm.length - 1)];
}

function redraw(): void {
  draw({
    canvas,
    pivots: { A: [0, 0], B: [toNumber(state.spec.bx), 0] },
    pose: currentPose(),
    tracePoints,
    locus: state.lastResult,
  });
}

function tick(): void {
  const arm = posesByBranch.ccw.length ? posesByBranch.ccw : posesByBranch.cw;
  if (animationRunning && arm.length > 1) {
    animationIndex += animationStep;
    // reverse at the feasibility limits so the mechanism rocks back and forth
    if (animationIndex >= arm.length - 1 || animationIndex <= 0) {
      animationStep = -animationStep;
      animationIndex = Math.max(0, Math.min(arm.length - 1, animationIndex));
    }
    redraw();
  }
  requestAnimationFrame(tick);
}

async function refresh(): Promise<void> {
  const spec = specJson(state.spec);
  history.replaceState(null, "", encodeSpecUrl(state.spec));
  try {
    const locusJob = await startJob<LocusResultJson>(API_BASE, "locus", spec, 60_000);
    const traceJob = await startJob<TraceResultJson>(
      API_BASE, "trace", { spec, samples: 360, branches: "both" }, 60_000);
    state = { ...state, pendingLocusHash: locusJob.hash, pendingTraceHash: traceJob.hash };

    const locusEnvelope = await locusJob.response;
    const before = state.lastEquation;
    state = applyLocusResponse(state, locusEnvelope.request_hash, locusEnvelope.result);
    if (state.lastEquation !== before && state.notifications.length) {
      const note = state.notifications[state.notifications.length - 1];
      renderNotification(note.equation, note.degree, note.degenerate);
    }
    renderEquation();
    showBanner(state.lastResult?.degenerate
      ? "Degenerate construction: the locus collapsed; showing pivots only"
      : "");

    const traceEnvelope = await traceJob.response;
    if (traceEnvelope.request_hash === state.pendingTraceHash) {
      state = { ...state, pendingTraceHash: null };
      const parsed = parseTraceCsv(traceEnvelope.result.csv);
      posesByBranch = {
        ccw: animationOrder(parsed.poses, "ccw"),
        cw: animationOrder(parsed.poses, "cw"),
      };
      tracePoints = parsed.poses.map((p) => p.M);
      animationIndex = 0;
      animationStep = 1;
      if (state.lastResult && tracePoints.length) {
        const worst = worstResidual(state.lastResult.generators, tracePoints);
        residualBox.textContent = `trace residual ≤ ${worst.toExponential(2)}`;
      }
    }
    redraw();
  } catch (err) {
    showBanner(err instanceof Error ? err.message : String(err));
  }
}

function bindSlider(field: SliderField): void {
  const input = document.getElementById(`slider-${field}`) as HTMLInputElement;
  const label = document.getElementById(`value-${field}`)!;
  const range = SLIDER_RANGES[field];
  input.min = String(range.min);
  input.max = String(range.max);
  input.step = "0.01";
  input.value = String(toNumber(state.spec[field]));
  label.textContent = format(state.spec[field]);
  input.addEventListener("input", () => {
    const { state: next, changed } = applySlider(state, field, Number(input.value));
    state = next;
    label.textContent = format(state.spec[field]);
    if (changed) {
      debouncer.schedule(() => void refresh());
    }
  });
}

function init(): void {
  (["bx", "f1", "f2", "g", "u", "v"] as SliderField[]).forEach(bindSlider);
  document.getElementById("toggle-animation")!.addEventListener("click", (e) => {
    animationRunning = !animationRunning;
    (e.target as HTMLButtonElement).textContent = animationRunning ? "Pause" : "Play";
  });
  void refresh();
  requestAnimationFrame(tick);
}

init();
