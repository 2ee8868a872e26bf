// Pure rendering: session state -> HTML string. No algebra happens here;
// polynomial and relation strings are inserted verbatim (escaped) from the
// server payload, which is what the replay tests pin down.

import { arrowSegments, evenPosition, HEIGHT, oddPosition, pathArcs, WIDTH } from "./layout.js";
import type { Exchange, SessionState } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export interface ViewOptions {
  notice?: string;
  exchange?: Exchange;
  pending?: boolean;
}

export function renderState(state: SessionState, options: ViewOptions = {}): string {
  return [
    '<div class="explorer">',
    renderNotice(options.notice),
    renderGraph(state, options.pending ?? false),
    renderExchange(options.exchange),
    renderCluster(state),
    renderHistory(state),
    "</div>",
  ].join("\n");
}

export function renderEmpty(hint: string): string {
  return `<div class="explorer"><p class="hint">${escapeHtml(hint)}</p></div>`;
}

/** renderState, but malformed payloads become an error banner instead of a
 * crash; the client never guesses missing data. */
export function renderSafe(state: SessionState, options: ViewOptions = {}): string {
  try {
    return renderState(state, options);
  } catch (error) {
    return `<div class="explorer"><p class="notice" role="alert">malformed server payload: ${escapeHtml(
      String(error),
    )}</p></div>`;
  }
}

function renderNotice(notice?: string): string {
  if (!notice) return "";
  return `<p class="notice" role="alert">${escapeHtml(notice)}</p>`;
}

function renderGraph(state: SessionState, pending: boolean): string {
  const q = state.quiver;
  if (q.n === 0 && q.m === 0) {
    return '<p class="hint">empty quiver</p>';
  }
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${WIDTH} ${HEIGHT}" class="quiver" role="img" aria-label="extended quiver">`,
  );
  parts.push(
    '<defs><marker id="arrow" viewBox="0 0 8 8" refX="7" refY="4" markerWidth="7" markerHeight="7" orient="auto"><path d="M0,0 L8,4 L0,8 z"/></marker></defs>',
  );
  for (const seg of arrowSegments(q)) {
    parts.push(
      `<line class="arrow" x1="${seg.a.x.toFixed(1)}" y1="${seg.a.y.toFixed(1)}" ` +
        `x2="${seg.b.x.toFixed(1)}" y2="${seg.b.y.toFixed(1)}" marker-end="url(#arrow)"/>`,
    );
    if (seg.mult > 1) {
      const mx = (seg.a.x + seg.b.x) / 2;
      const my = (seg.a.y + seg.b.y) / 2;
      parts.push(
        `<text class="mult" x="${mx.toFixed(1)}" y="${(my - 6).toFixed(1)}">${seg.mult}</text>`,
      );
    }
  }
  for (const arc of pathArcs(q)) {
    parts.push(`<path class="twopath" data-path="${arc.tail}-${arc.k}-${arc.head}" d="${arc.d}" marker-end="url(#arrow)"/>`);
    const mid = evenPosition(arc.k, q.n);
    parts.push(
      `<text class="path-mult" data-path-mult="${arc.i},${arc.j},${arc.k}" ` +
        `x="${(mid.x + 12).toFixed(1)}" y="${(mid.y - 12).toFixed(1)}">${arc.mult}</text>`,
    );
  }
  for (let k = 1; k <= q.n; k++) {
    const pos = evenPosition(k, q.n);
    const mutable = state.mutable[k - 1] && !pending;
    const classes = ["even-vertex", mutable ? "mutable" : "disabled"];
    parts.push(
      `<g class="${classes.join(" ")}" data-vertex="${k}" data-mutable="${state.mutable[k - 1]}">` +
        `<circle cx="${pos.x.toFixed(1)}" cy="${pos.y.toFixed(1)}" r="18"/>` +
        `<text x="${pos.x.toFixed(1)}" y="${(pos.y + 4).toFixed(1)}">${escapeHtml(
          state.names.even[k - 1] ?? `x${k}`,
        )}</text>` +
        renderWeightBadge(state, k, pos.x, pos.y) +
        "</g>",
    );
  }
  for (let i = 1; i <= q.m; i++) {
    const pos = oddPosition(i, q.m);
    parts.push(
      `<g class="odd-vertex" data-odd="${i}">` +
        `<rect x="${(pos.x - 14).toFixed(1)}" y="${(pos.y - 14).toFixed(1)}" width="28" height="28" transform="rotate(45 ${pos.x.toFixed(1)} ${pos.y.toFixed(1)})"/>` +
        `<text x="${pos.x.toFixed(1)}" y="${(pos.y + 4).toFixed(1)}">${escapeHtml(
          state.names.odd[i - 1] ?? `xi${i}`,
        )}</text>` +
        "</g>",
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

function renderWeightBadge(state: SessionState, k: number, x: number, y: number): string {
  if (!state.weights) return "";
  const w = state.weights[k - 1];
  return (
    `<g class="weight-badge"><circle cx="${(x + 20).toFixed(1)}" cy="${(y - 16).toFixed(1)}" r="11"/>` +
    `<text class="weight" data-weight="${k}" x="${(x + 20).toFixed(1)}" y="${(y - 12).toFixed(1)}">${w}</text></g>`
  );
}

function renderExchange(exchange?: Exchange): string {
  if (!exchange) return "";
  return (
    '<section class="exchange"><h2>exchange relation</h2>' +
    `<code class="relation">${escapeHtml(exchange.rendered)}</code></section>`
  );
}

function renderCluster(state: SessionState): string {
  const rows = state.cluster
    .map((entry, idx) => {
      const name = state.names.even[idx] ?? `x${idx + 1}`;
      return (
        `<tr><th>${escapeHtml(name)}</th>` +
        `<td><code class="poly" data-vertex="${idx + 1}">${escapeHtml(entry.rendered)}</code></td></tr>`
      );
    })
    .join("");
  return `<section class="cluster"><h2>cluster</h2><table>${rows}</table></section>`;
}

function renderHistory(state: SessionState): string {
  const crumbs = state.history.length
    ? state.history.map((k) => `<span class="crumb">&mu;${k}</span>`).join(" &rarr; ")
    : '<span class="crumb empty">initial seed</span>';
  const undo = state.undo_depth > 0 ? "" : " disabled";
  return (
    '<section class="history"><h2>history</h2>' +
    `<p class="breadcrumb">${crumbs}</p>` +
    `<button class="undo" data-undo${undo}>undo</button></section>`
  );
}
