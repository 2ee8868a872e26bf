// Controller behavior: local frozen-vertex rejection, single in-flight
// request, undo, and surfacing of server errors -- against a fake API fed
// with the recorded fixture payloads.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it, vi } from "vitest";

import { ApiError, type SessionApi } from "../src/api.js";
import { SessionController } from "../src/controller.js";
import { escapeHtml } from "../src/render.js";
import type { CreateResponse, MutateResponse, SessionState } from "../src/types.js";

const fixturePath = join(dirname(fileURLToPath(import.meta.url)), "..", "fixtures", "session_walk.json");
const recording = JSON.parse(readFileSync(fixturePath, "utf8"));

function walkOf(name: string) {
  return recording.walks.find((w: { session: string }) => w.session === name);
}

function fakeApi(overrides: Partial<SessionApi>): SessionApi {
  return {
    create: vi.fn(async () => {
      throw new Error("unexpected create");
    }),
    state: vi.fn(async () => {
      throw new Error("unexpected state");
    }),
    mutate: vi.fn(async () => {
      throw new Error("unexpected mutate");
    }),
    undo: vi.fn(async () => {
      throw new Error("unexpected undo");
    }),
    ...overrides,
  };
}

describe("SessionController", () => {
  it("replays the two-odd-vertex walk and renders each server payload", async () => {
    const walk = walkOf("two_vertex_example");
    const created = walk.steps[0].response as CreateResponse;
    const mutations: MutateResponse[] = [walk.steps[1].response, walk.steps[2].response];
    const undone: SessionState = walk.steps[3].response.state;
    let call = 0;
    const api = fakeApi({
      create: vi.fn(async () => created),
      mutate: vi.fn(async () => mutations[call++]),
      undo: vi.fn(async () => undone),
    });
    const frames: string[] = [];
    const controller = new SessionController(api, (html) => frames.push(html));

    await controller.open({ name: "two_vertex_example" });
    expect(await controller.clickVertex(1)).toBe("applied");
    expect(await controller.clickVertex(2)).toBe("applied");
    await controller.undo();

    const last = frames[frames.length - 1];
    for (const entry of undone.cluster) {
      expect(last).toContain(escapeHtml(entry.rendered));
    }
    // the mutate frames rendered the exchange relation from the payload
    const relation = mutations[0].exchange.rendered;
    expect(frames.some((frame) => frame.includes(escapeHtml(relation)))).toBe(true);
  });

  it("rejects frozen-vertex clicks locally, without any request", async () => {
    const walk = walkOf("osp_example");
    const created = walk.steps[0].response as CreateResponse;
    const mutate = vi.fn();
    const api = fakeApi({ create: vi.fn(async () => created), mutate });
    const frames: string[] = [];
    const controller = new SessionController(api, (html) => frames.push(html));

    await controller.open({ name: "osp_example" });
    const outcome = await controller.clickVertex(2);

    expect(outcome).toBe("rejected");
    expect(mutate).not.toHaveBeenCalled();
    expect(frames[frames.length - 1]).toContain("vertex 2 is frozen");
    // the server records the same rejection for this click (status 409)
    expect(walk.steps[1].status).toBe(409);
  });

  it("surfaces a server 409 if one arrives anyway", async () => {
    const walk = walkOf("osp_example");
    const created = walk.steps[0].response as CreateResponse;
    // pretend the state lied about mutability so the request goes through
    created.state.mutable = [true, true, true];
    const api = fakeApi({
      create: vi.fn(async () => created),
      mutate: vi.fn(async () => {
        throw new ApiError(409, "vertex is frozen: vertex 2 is frozen");
      }),
    });
    const frames: string[] = [];
    const controller = new SessionController(api, (html) => frames.push(html));
    await controller.open({ name: "osp_example" });
    expect(await controller.clickVertex(2)).toBe("failed");
    expect(frames[frames.length - 1]).toContain("frozen");
  });

  it("allows only one in-flight request per session", async () => {
    const walk = walkOf("somos4_a");
    const created = walk.steps[0].response as CreateResponse;
    let release: (value: MutateResponse) => void = () => {};
    const gate = new Promise<MutateResponse>((resolve) => {
      release = resolve;
    });
    const mutate = vi.fn(() => gate);
    const api = fakeApi({ create: vi.fn(async () => created), mutate });
    const controller = new SessionController(api, () => {});

    await controller.open({ name: "somos4_a" });
    const first = controller.clickVertex(1);
    expect(controller.isPending()).toBe(true);
    expect(await controller.clickVertex(2)).toBe("busy");
    release(walk.steps[1].response as MutateResponse);
    expect(await first).toBe("applied");
    expect(mutate).toHaveBeenCalledTimes(1);
  });

  it("disables vertices in the rendered view while a request is pending", async () => {
    const walk = walkOf("somos4_a");
    const created = walk.steps[0].response as CreateResponse;
    let release: (value: MutateResponse) => void = () => {};
    const gate = new Promise<MutateResponse>((resolve) => {
      release = resolve;
    });
    const frames: string[] = [];
    const api = fakeApi({
      create: vi.fn(async () => created),
      mutate: vi.fn(() => gate),
    });
    const controller = new SessionController(api, (html) => frames.push(html));
    await controller.open({ name: "somos4_a" });
    const click = controller.clickVertex(1);
    const pendingFrame = frames[frames.length - 1];
    expect(pendingFrame).not.toContain("mutable\"");
    expect(pendingFrame.match(/class="even-vertex disabled"/g)?.length).toBe(4);
    release(walk.steps[1].response as MutateResponse);
    await click;
  });
});
