// Geometry for the quiver picture: even vertices on an inner circle, odd
// vertices on an upper arc, arrows as lines with multiplicity labels, and
// every 2-path drawn as one curved arc odd -> even -> odd.

import type { QuiverData } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export const WIDTH = 640;
export const HEIGHT = 420;

export function evenPosition(k: number, n: number): Point {
  const angle = (2 * Math.PI * (k - 1)) / Math.max(n, 1) - Math.PI / 2;
  return {
    x: WIDTH / 2 + 150 * Math.cos(angle),
    y: HEIGHT / 2 + 60 + 110 * Math.sin(angle),
  };
}

export function oddPosition(i: number, m: number): Point {
  const span = Math.max(m - 1, 1);
  const t = m === 1 ? 0.5 : (i - 1) / span;
  return { x: 80 + t * (WIDTH - 160), y: 46 };
}

export interface ArrowSegment {
  from: number;
  to: number;
  mult: number;
  a: Point;
  b: Point;
}

export function arrowSegments(quiver: QuiverData): ArrowSegment[] {
  const out: ArrowSegment[] = [];
  for (let i = 1; i <= quiver.n; i++) {
    for (let j = i + 1; j <= quiver.n; j++) {
      const v = quiver.b[i - 1][j - 1];
      if (v === 0) continue;
      const [from, to] = v > 0 ? [i, j] : [j, i];
      out.push({
        from,
        to,
        mult: Math.abs(v),
        a: evenPosition(from, quiver.n),
        b: evenPosition(to, quiver.n),
      });
    }
  }
  return out;
}

export interface PathArc {
  i: number;
  j: number;
  k: number;
  mult: number;
  /** path runs tail -> x_k -> head; negative stored mult means j -> k -> i */
  tail: number;
  head: number;
  d: string;
}

export function pathArcs(quiver: QuiverData): PathArc[] {
  return quiver.paths.map((p) => {
    const tail = p.mult > 0 ? p.i : p.j;
    const head = p.mult > 0 ? p.j : p.i;
    const a = oddPosition(tail, quiver.m);
    const mid = evenPosition(p.k, quiver.n);
    const b = oddPosition(head, quiver.m);
    const d = `M ${round(a.x)} ${round(a.y)} Q ${round(mid.x)} ${round(mid.y)} ${round(b.x)} ${round(b.y)}`;
    return { i: p.i, j: p.j, k: p.k, mult: Math.abs(p.mult), tail, head, d };
  });
}

function round(v: number): number {
  return Math.round(v * 10) / 10;
}
