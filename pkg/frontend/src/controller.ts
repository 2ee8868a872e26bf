// Session controller: owns the latest server state, serializes requests
// (one in flight per session), and rejects frozen-vertex clicks locally
// before they ever reach the network.

import { ApiError, type SessionApi } from "./api.js";
import { renderSafe, type ViewOptions } from "./render.js";
import type { Exchange, SessionState } from "./types.js";

export type Sink = (html: string) => void;

export class SessionController {
  private state: SessionState | null = null;
  private exchange: Exchange | undefined;
  private notice: string | undefined;
  private pending = false;

  constructor(
    private readonly api: SessionApi,
    private readonly sink: Sink,
  ) {}

  current(): SessionState | null {
    return this.state;
  }

  isPending(): boolean {
    return this.pending;
  }

  async open(body: Record<string, unknown>): Promise<void> {
    const created = await this.api.create(body);
    this.state = created.state;
    this.exchange = undefined;
    this.notice = undefined;
    this.draw();
  }

  /** Returns how the click was handled: locally rejected, applied, or failed. */
  async clickVertex(vertex: number): Promise<"rejected" | "applied" | "failed" | "busy"> {
    if (!this.state) return "failed";
    if (this.pending) return "busy";
    if (!this.state.mutable[vertex - 1]) {
      // client-side guard: frozen vertices never trigger a request
      this.notice = `vertex ${vertex} is frozen`;
      this.draw();
      return "rejected";
    }
    this.pending = true;
    this.draw();
    try {
      const out = await this.api.mutate(this.state.id, vertex);
      this.state = out.state;
      this.exchange = out.exchange;
      this.notice = undefined;
      return "applied";
    } catch (error) {
      this.notice = error instanceof ApiError ? error.message : String(error);
      return "failed";
    } finally {
      this.pending = false;
      this.draw();
    }
  }

  async undo(): Promise<boolean> {
    if (!this.state || this.pending) return false;
    this.pending = true;
    this.draw();
    try {
      this.state = await this.api.undo(this.state.id);
      this.exchange = undefined;
      this.notice = undefined;
      return true;
    } catch (error) {
      this.notice = error instanceof ApiError ? error.message : String(error);
      return false;
    } finally {
      this.pending = false;
      this.draw();
    }
  }

  draw(): void {
    if (!this.state) return;
    const options: ViewOptions = {
      notice: this.notice,
      exchange: this.exchange,
      pending: this.pending,
    };
    this.sink(renderSafe(this.state, options));
  }
}
