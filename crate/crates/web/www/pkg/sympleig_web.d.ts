/* tslint:disable */
/* eslint-disable */

export function cayley(matrix_json: string, sigma_json: string, steps: number): string;

export function construct(sigmas_json: string): string;

export function marginGrid(matrix_json: string, gamma: number, nx: number, ny: number): Float64Array;

export function randomSigmas(seed: number): string;

/**
 * `Re(conj(q) σ)`, exposed for the page's tooltip.
 */
export function real_part_condition(q_json: string, sigma_json: string): number;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly cayley: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly construct: (a: number, b: number) => [number, number, number, number];
    readonly marginGrid: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly randomSigmas: (a: number) => [number, number];
    readonly real_part_condition: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
