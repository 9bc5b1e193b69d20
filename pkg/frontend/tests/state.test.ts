import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { buildScene } from "../src/scene.js";
import { EditorStore } from "../src/state.js";
import type { AlgorithmInfo, ComputeResult } from "../src/types.js";

const CATALOG: AlgorithmInfo[] = [
  { id: "gabriel", kind: "graph", params: [] },
  {
    id: "epsilon",
    kind: "graph",
    params: [{ name: "epsilon", required: true, integer: false, placeholder: 28 }],
  },
  {
    id: "yao",
    kind: "graph",
    params: [
      { name: "sectors", required: false, integer: true, default: 5 },
      { name: "origin", required: false, integer: false, default: 0 },
    ],
  },
  {
    id: "kmeans",
    kind: "clustering",
    params: [
      { name: "k", required: false, integer: true, default: 3 },
      { name: "seed", required: false, integer: true, default: 0 },
      { name: "max_iter", required: false, integer: true, default: 100 },
    ],
  },
  {
    id: "hdbscan",
    kind: "clustering",
    params: [
      { name: "min_pts", required: false, integer: true, default: 3 },
      { name: "min_cluster_size", required: false, integer: true, default: "min_pts" },
    ],
  },
];

interface StubCall {
  points: [number, number][];
  algorithm: string;
  params: Record<string, number>;
  render?: string;
}

function makeStubClient(results: () => ComputeResult) {
  const calls: StubCall[] = [];
  const fetchFn = async (url: string, init?: RequestInit) => {
    if (url.endsWith("/api/algorithms")) {
      return new Response(JSON.stringify({ algorithms: CATALOG }), { status: 200 });
    }
    const body = JSON.parse(String(init?.body));
    const render = url.includes("render=") ? url.split("render=")[1] : undefined;
    calls.push({ ...body, render });
    const payload: Record<string, unknown> = { ...results() };
    if (render) payload[render] = `<${render} content>`;
    return new Response(JSON.stringify(payload), { status: 200 });
  };
  return { calls, client: new ApiClient("http://svc", fetchFn as unknown as typeof fetch) };
}

const GRAPH_RESULT: ComputeResult = { type: "graph", n: 2, edges: [[0, 1]] };

describe("EditorStore", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  async function settled(store: EditorStore) {
    await vi.advanceTimersByTimeAsync(200);
  }

  async function makeStore(results: () => ComputeResult = () => GRAPH_RESULT) {
    const { calls, client } = makeStubClient(results);
    const store = new EditorStore(client);
    await store.loadCatalog();
    return { store, calls };
  }

  it("places points and rejects exact duplicates with a hint", async () => {
    const { store } = await makeStore();
    expect(store.placePoint(100, 100)).toBe(true);
    expect(store.placePoint(100, 100)).toBe(false);
    expect(store.state.points).toHaveLength(1);
    expect(store.state.hint).not.toBe("");
  });

  it("single point computes nothing and draws no edges", async () => {
    const { store, calls } = await makeStore();
    store.selectAlgorithm("gabriel");
    store.placePoint(100, 100);
    await settled(store);
    expect(calls).toHaveLength(0);
    const scene = buildScene(store.state.points, store.state.lastResult);
    expect(scene.marks).toHaveLength(1);
    expect(scene.segments).toHaveLength(0);
  });

  it("two points with gabriel renders exactly one segment", async () => {
    const { store, calls } = await makeStore();
    store.selectAlgorithm("gabriel");
    store.placePoint(100, 100);
    store.placePoint(200, 150);
    await settled(store);
    expect(calls).toHaveLength(1); // debounced into one request
    const scene = buildScene(store.state.points, store.state.lastResult);
    expect(scene.segments).toHaveLength(1);
    expect(store.state.stale).toBe(false);
  });

  it("scene edges come from the service response, not local geometry", async () => {
    // the stub returns an empty edge set for two nearby points: the UI must
    // draw nothing even though a local Gabriel test would connect them
    const { store } = await makeStore(() => ({ type: "graph", n: 2, edges: [] }));
    store.selectAlgorithm("gabriel");
    store.placePoint(0, 0);
    store.placePoint(1, 0);
    await settled(store);
    expect(buildScene(store.state.points, store.state.lastResult).segments).toHaveLength(0);
  });

  it("epsilon panel shows the suggested placeholder 28 and blocks until set", async () => {
    const { store, calls } = await makeStore();
    store.selectAlgorithm("epsilon");
    const [field] = store.panelFields();
    expect(field.name).toBe("epsilon");
    expect(field.placeholder).toBe(28);
    expect(field.value).toBe("");
    store.placePoint(0, 0);
    store.placePoint(50, 0);
    await settled(store);
    expect(calls).toHaveLength(0);
    expect(store.missingParams()).toEqual(["epsilon"]);
    store.setParam("epsilon", 28);
    await settled(store);
    expect(calls).toHaveLength(1);
    expect(calls[0].params.epsilon).toBe(28);
  });

  it("yao panel prefills sectors with 5", async () => {
    const { store } = await makeStore();
    store.selectAlgorithm("yao");
    const sectors = store.panelFields().find((f) => f.name === "sectors");
    expect(sectors?.value).toBe(5);
  });

  it("kmeans with k cleared sends nothing and flags the field", async () => {
    const { store, calls } = await makeStore();
    store.selectAlgorithm("kmeans");
    store.placePoint(0, 0);
    store.placePoint(10, 10);
    store.setParam("k", "");
    await settled(store);
    expect(calls).toHaveLength(0);
    expect(store.missingParams()).toEqual(["k"]);
  });

  it("dependent default mirrors the sibling parameter", async () => {
    const { store } = await makeStore();
    store.selectAlgorithm("hdbscan");
    const mcs = store.panelFields().find((f) => f.name === "min_cluster_size");
    expect(mcs?.value).toBe(3);
  });

  it("clustering results color points by label with noise as gray cross", async () => {
    const { store } = await makeStore(() => ({
      type: "clustering",
      labels: [0, 1, -1],
      noise: -1,
    }));
    store.selectAlgorithm("kmeans");
    store.placePoint(0, 0);
    store.placePoint(10, 0);
    store.placePoint(20, 0);
    await settled(store);
    const scene = buildScene(store.state.points, store.state.lastResult);
    expect(scene.marks.map((m) => m.symbol)).toEqual(["disk", "disk", "cross"]);
    expect(scene.marks[0].color).toBe("#000000");
    expect(scene.marks[1].color).toBe("#ff0000");
    expect(scene.marks[2].color).toBe("#808080");
  });

  it("edits mark the display stale until the response lands", async () => {
    const { store } = await makeStore();
    store.selectAlgorithm("gabriel");
    store.placePoint(0, 0);
    store.placePoint(10, 0);
    expect(store.state.stale).toBe(true);
    await settled(store);
    expect(store.state.stale).toBe(false);
    store.placePoint(20, 20);
    expect(store.state.stale).toBe(true);
  });

  it("blocks exports while pending or stale, allows when current", async () => {
    const { store } = await makeStore();
    store.selectAlgorithm("gabriel");
    store.placePoint(0, 0);
    store.placePoint(10, 0);
    expect(store.exportBlocked()).toBe(true);
    await settled(store);
    expect(store.exportBlocked()).toBe(false);
    const ipe = await store.exportDrawing("ipe");
    expect(ipe).toBe("<ipe content>");
  });

  it("export csv then re-import yields the identical point list", async () => {
    const { store } = await makeStore();
    store.selectAlgorithm("gabriel");
    store.placePoint(100.5, 200.25);
    store.placePoint(300, 7);
    const csv = store.exportCsv();
    const { store: fresh } = await makeStore();
    for (const line of csv.trim().split("\n")) {
      const [x, y] = line.split(",").map(Number);
      fresh.placePoint(x, y);
    }
    expect(fresh.state.points).toEqual(store.state.points);
  });

  it("removePoint deletes and recomputes", async () => {
    const { store, calls } = await makeStore();
    store.selectAlgorithm("gabriel");
    store.placePoint(0, 0);
    store.placePoint(10, 0);
    store.placePoint(20, 0);
    await settled(store);
    const before = calls.length;
    store.removePoint(1);
    await settled(store);
    expect(store.state.points.map((p) => p.x)).toEqual([0, 20]);
    expect(calls.length).toBe(before + 1);
    expect(calls[calls.length - 1].points).toEqual([[0, 0], [20, 0]]);
  });

  it("pointNear finds the closest point within the radius", async () => {
    const { store } = await makeStore();
    store.placePoint(0, 0);
    store.placePoint(100, 100);
    expect(store.pointNear(98, 99, 6)).toBe(1);
    expect(store.pointNear(50, 50, 6)).toBe(-1);
  });
});
