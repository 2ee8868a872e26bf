// Browser bootstrap: pick a server and a starting quiver, mount the
// controller, and wire clicks through event delegation.

import { httpApi } from "./api.js";
import { SessionController } from "./controller.js";
import { renderEmpty } from "./render.js";

const NAMED = ["two_vertex_example", "somos4_a", "somos4_b", "osp_example", "aquiv(2)", "aquiv(3)"];

function mount(): void {
  const root = document.getElementById("app");
  const serverInput = document.getElementById("server") as HTMLInputElement;
  const picker = document.getElementById("picker") as HTMLSelectElement;
  const openButton = document.getElementById("open") as HTMLButtonElement;
  if (!root || !serverInput || !picker || !openButton) return;

  for (const name of NAMED) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    picker.appendChild(option);
  }
  root.innerHTML = renderEmpty("pick a quiver and open a session");

  let controller: SessionController | null = null;

  openButton.addEventListener("click", async () => {
    const api = httpApi(serverInput.value);
    controller = new SessionController(api, (html) => {
      root.innerHTML = html;
    });
    try {
      await controller.open({ name: picker.value });
    } catch (error) {
      root.innerHTML = renderEmpty(`could not open session: ${String(error)}`);
    }
  });

  root.addEventListener("click", (event) => {
    if (!controller) return;
    const target = event.target as Element;
    const vertexNode = target.closest("[data-vertex]");
    if (vertexNode instanceof SVGElement || vertexNode instanceof HTMLElement) {
      const vertex = Number(vertexNode.getAttribute("data-vertex"));
      if (vertex) void controller.clickVertex(vertex);
      return;
    }
    if (target.closest("[data-undo]")) {
      void controller.undo();
    }
  });
}

mount();
