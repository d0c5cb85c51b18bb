/** Spec sharing via the query string: ?spec=<uri-encoded spec JSON>. */

import type { SpecJson } from "./api.js";
import { parse, type Rational } from "./rational.js";
import { defaultSpec, specJson, type ExplorerSpec } from "./state.js";

export function encodeSpecUrl(spec: ExplorerSpec): string {
  return `?spec=${encodeURIComponent(JSON.stringify(specJson(spec)))}`;
}

export function decodeSpecUrl(search: string): ExplorerSpec {
  const params = new URLSearchParams(search);
  const raw = params.get("spec");
  if (!raw) return defaultSpec();
  try {
    const data = JSON.parse(raw) as SpecJson;
    const r = (text: string): Rational => parse(text);
    return {
      bx: r(data.B[0]),
      f1: r(data.f1),
      f2: r(data.f2),
      g: r(data.g),
      u: r(data.u),
      v: r(data.v),
    };
  } catch {
    return defaultSpec();
  }
}
