/* tslint:disable */
/* eslint-disable */

/**
 * Walls crossed between `a` and `b` (comma-separated coordinates) for a
 * named wall set, in crossing order, with an SVG picture.
 */
export function chamber_view(walls: string, a: string, b: string): string;

/**
 * Membership of `t1^m t2^n / (t1 - t2)^k` at `alpha` and `beta`, its
 * eigenvalue, and the annihilator of the quotient between them.
 */
export function diag_explorer(m: number, n: number, k: number, alpha: string, beta: string): string;

/**
 * Local zeta function, poles, candidate poles and lct of a line
 * arrangement.
 */
export function line_zeta(text: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly chamber_view: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly diag_explorer: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly line_zeta: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
