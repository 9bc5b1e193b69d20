import { ApiClient } from "./api.js";
import { EditorStore } from "./state.js";
import { buildScene } from "./scene.js";

const DEFAULT_API = "http://127.0.0.1:8420";

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return override ?? DEFAULT_API;
}

const store = new EditorStore(new ApiClient(apiBase()));

const canvas = document.getElementById("canvas") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const algorithmSelect = document.getElementById("algorithm") as HTMLSelectElement;
const paramPanel = document.getElementById("params") as HTMLDivElement;
const statusBar = document.getElementById("status") as HTMLDivElement;
const hintBar = document.getElementById("hint") as HTMLDivElement;
const staleBadge = document.getElementById("stale") as HTMLSpanElement;
const exportButtons = {
  ipe: document.getElementById("export-ipe") as HTMLButtonElement,
  svg: document.getElementById("export-svg") as HTMLButtonElement,
  csv: document.getElementById("export-csv") as HTMLButtonElement,
};

// drawing units == canvas pixels; only the y-axis flips at this boundary
function toDrawing(ev: MouseEvent): { x: number; y: number } {
  const rect = canvas.getBoundingClientRect();
  const x = (ev.clientX - rect.left) * (canvas.width / rect.width);
  const yDown = (ev.clientY - rect.top) * (canvas.height / rect.height);
  return { x, y: canvas.height - yDown };
}

canvas.addEventListener("click", (ev) => {
  const { x, y } = toDrawing(ev);
  if (ev.shiftKey) {
    const victim = store.pointNear(x, y, 6);
    if (victim >= 0) store.removePoint(victim);
    return;
  }
  store.placePoint(x, y);
});

canvas.addEventListener("contextmenu", (ev) => {
  ev.preventDefault();
  const { x, y } = toDrawing(ev);
  const victim = store.pointNear(x, y, 6);
  if (victim >= 0) store.removePoint(victim);
});

algorithmSelect.addEventListener("change", () => {
  store.selectAlgorithm(algorithmSelect.value);
  rebuildParamPanel();
});

function rebuildParamPanel(): void {
  paramPanel.replaceChildren();
  for (const field of store.panelFields()) {
    const label = document.createElement("label");
    label.textContent = field.name;
    const input = document.createElement("input");
    input.type = "number";
    input.name = field.name;
    if (field.integer) input.step = "1";
    if (field.placeholder !== undefined) input.placeholder = String(field.placeholder);
    if (field.value !== "") input.value = String(field.value);
    input.addEventListener("input", () => {
      const raw = input.value.trim();
      store.setParam(field.name, raw === "" ? "" : Number(raw));
    });
    label.appendChild(input);
    paramPanel.appendChild(label);
  }
  highlightMissing();
}

function highlightMissing(): void {
  const missing = new Set(store.missingParams());
  paramPanel.querySelectorAll("input").forEach((input) => {
    input.classList.toggle("missing", missing.has(input.name));
  });
}

function download(name: string, data: string, type: string): void {
  const blob = new Blob([data], { type });
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
}

exportButtons.ipe.addEventListener("click", () => {
  void store.exportDrawing("ipe").then(
    (text) => download("drawing.ipe", text, "application/xml"),
    (err) => (statusBar.textContent = String(err))
  );
});
exportButtons.svg.addEventListener("click", () => {
  void store.exportDrawing("svg").then(
    (text) => download("drawing.svg", text, "image/svg+xml"),
    (err) => (statusBar.textContent = String(err))
  );
});
exportButtons.csv.addEventListener("click", () => {
  download("points.csv", store.exportCsv(), "text/csv");
});

const fileInput = document.getElementById("import-csv") as HTMLInputElement;
fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  const text = await file.text();
  for (const line of text.split("\n")) {
    const parts = line.trim().split(",");
    if (parts.length !== 2) continue;
    const x = Number(parts[0]);
    const y = Number(parts[1]);
    if (Number.isFinite(x) && Number.isFinite(y)) store.placePoint(x, y);
  }
  fileInput.value = "";
});

function paint(): void {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const scene = buildScene(store.state.points, store.state.lastResult);
  const flip = (y: number) => canvas.height - y;
  ctx.lineWidth = 1;
  for (const seg of scene.segments) {
    ctx.strokeStyle = seg.color;
    ctx.beginPath();
    ctx.moveTo(seg.x1, flip(seg.y1));
    ctx.lineTo(seg.x2, flip(seg.y2));
    ctx.stroke();
  }
  for (const mark of scene.marks) {
    const y = flip(mark.y);
    if (mark.symbol === "cross") {
      ctx.strokeStyle = mark.color;
      ctx.beginPath();
      ctx.moveTo(mark.x - 3, y - 3);
      ctx.lineTo(mark.x + 3, y + 3);
      ctx.moveTo(mark.x - 3, y + 3);
      ctx.lineTo(mark.x + 3, y - 3);
      ctx.stroke();
    } else {
      ctx.fillStyle = mark.color;
      ctx.beginPath();
      ctx.arc(mark.x, y, 3, 0, 2 * Math.PI);
      ctx.fill();
    }
  }
}

store.subscribe(() => {
  paint();
  statusBar.textContent = store.state.status;
  hintBar.textContent = store.state.hint;
  staleBadge.hidden = !store.state.stale;
  const blocked = store.exportBlocked();
  exportButtons.ipe.disabled = blocked;
  exportButtons.svg.disabled = blocked;
  highlightMissing();
});

void store.loadCatalog().then(() => {
  algorithmSelect.replaceChildren(
    ...store.state.algorithms.map((a) => {
      const opt = document.createElement("option");
      opt.value = a.id;
      opt.textContent = a.id;
      return opt;
    })
  );
  store.selectAlgorithm(store.state.algorithms[0]?.id ?? "");
  rebuildParamPanel();
});
