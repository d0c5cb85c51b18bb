/** Captured responses from the real backend HTTP routes. */

import { readFileSync } from "node:fs";

import type { Envelope, LocusResultJson, TraceResultJson } from "../src/api.js";

function load<T>(name: string): Envelope<T> {
  const url = new URL(`./fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as Envelope<T>;
}

export const locusCircle = load<LocusResultJson>("locus_circle");
export const locusGeneric = load<LocusResultJson>("locus_generic");
export const traceGeneric = load<TraceResultJson>("trace_generic");
