/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const conjecture: (a: number, b: number, c: number) => [number, number, number, number];
export const dnf_formula: (a: number, b: number) => [number, number, number, number];
export const dnf_summary: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const p3_run: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const teach_fixture: (a: number, b: number, c: number) => [number, number, number, number];
export const teach_ocg: (a: number, b: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
