/**
 * Typed client for the locusforge HTTP routes. The request hash echoed by
 * the service is the sha256 of the exact bytes sent, so it is computed here
 * from the serialized body before the fetch goes out.
 */

export interface SpecJson {
  A: [string, string];
  B: [string, string];
  f1: string;
  f2: string;
  g: string;
  u: string;
  v: string;
}

export interface TermJson {
  coeff: string;
  exps: number[];
}

export interface GeneratorJson {
  string: string;
  terms: TermJson[];
}

export interface LocusResultJson {
  generators: GeneratorJson[];
  degree: number;
  principal: boolean;
  degenerate: boolean;
  elapsed_ms: number;
}

export interface TraceResultJson {
  csv: string;
  poses: number;
  skipped: number;
}

export interface Envelope<R> {
  kind: string;
  request_hash: string;
  result: R;
}

export async function sha256Hex(text: string): Promise<string> {
  const digest = await crypto.subtle.digest("SHA-256", new TextEncoder().encode(text));
  return Array.from(new Uint8Array(digest))
    .map((b) => b.toString(16).padStart(2, "0"))
    .join("");
}

export interface PendingRequest<R> {
  hash: string;
  response: Promise<Envelope<R>>;
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly code: string, message: string) {
    super(message);
  }
}

async function postBody<R>(base: string, kind: string, body: string): Promise<Envelope<R>> {
  const response = await fetch(`${base}/${kind}`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body,
  });
  const payload = await response.json();
  if (!response.ok) {
    const err = payload?.error ?? { code: "internal", message: "unknown error" };
    throw new ApiError(response.status, err.code, err.message);
  }
  return payload as Envelope<R>;
}

/** Serialize the job, compute its hash, and start the request. */
export async function startJob<R>(
  base: string,
  kind: "locus" | "trace" | "fit" | "prove",
  payload: unknown,
  deadlineMs = 30_000,
): Promise<PendingRequest<R>> {
  const body = JSON.stringify({ kind, payload, deadline_ms: deadlineMs });
  const hash = await sha256Hex(body);
  return { hash, response: postBody<R>(base, kind, body) };
}
