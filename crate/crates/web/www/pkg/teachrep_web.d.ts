/* tslint:disable */
/* eslint-disable */

/**
 * Exhaustive projection-matrix search (`k * n <= 20`).
 */
export function conjecture(k: number, n: number, q: number): string;

/**
 * Parses a DNF formula and reports its size, truth table and the
 * witnesses it is consistent with.
 */
export function dnf_formula(formula: string): string;

/**
 * Tables 1–3 for one DNF domain, e.g. `("3term", "max5", "desc")`.
 */
export function dnf_summary(variant: string, spec: string, tiebreak: string): string;

/**
 * Runs a P3 program with a step-by-step trace of at most `trace_limit`
 * states.
 */
export function p3_run(program: string, input: string, step_limit: number, trace_limit: number): string;

/**
 * All four protocols and both metrics on a fixture graph:
 * `figure1`, `separation:s:t:k` or `random:reps:wits:p` (seeded).
 */
export function teach_fixture(name: string, seed: number): string;

/**
 * All four protocols and both metrics on an `OCG v1` graph text.
 */
export function teach_ocg(text: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly conjecture: (a: number, b: number, c: number) => [number, number, number, number];
    readonly dnf_formula: (a: number, b: number) => [number, number, number, number];
    readonly dnf_summary: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly p3_run: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly teach_fixture: (a: number, b: number, c: number) => [number, number, number, number];
    readonly teach_ocg: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
