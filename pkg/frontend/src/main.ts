/** Interactive explorer: menus for Network / View / Data / Analysis,
 * canvas rendering with drag + pan/zoom.  All numeric results come from
 * the server; this module only renders and forwards actions. */

import { ApiError, NetmineClient, NetworkPayload } from "./api.js";
import { buildScene, hitTest, paintScene, Scene } from "./scene.js";
import {
  attributeNames,
  initialViewState,
  panBy,
  toWorld,
  ViewState,
  zoomAt,
} from "./state.js";

const client = new NetmineClient("");
let network: NetworkPayload | null = null;
let view: ViewState = initialViewState();
let scene: Scene | null = null;

const canvas = document.getElementById("canvas") as HTMLCanvasElement;
const statusBar = document.getElementById("status") as HTMLElement;
const banner = document.getElementById("banner") as HTMLElement;
const dataPanel = document.getElementById("data-panel") as HTMLElement;

function showBanner(message: string): void {
  banner.textContent = message;
  banner.classList.add("visible");
  window.setTimeout(() => banner.classList.remove("visible"), 5000);
}

function setStatus(message: string): void {
  statusBar.textContent = message;
}

function redraw(): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  if (!network) {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    return;
  }
  scene = buildScene(network, view, canvas.width, canvas.height);
  paintScene(ctx, scene, canvas.width, canvas.height);
}

function resizeCanvas(): void {
  const frame = canvas.parentElement as HTMLElement;
  canvas.width = frame.clientWidth;
  canvas.height = frame.clientHeight;
  redraw();
}

async function guard<T>(work: () => Promise<T>, doing: string): Promise<T | null> {
  setStatus(doing + "...");
  try {
    const result = await work();
    setStatus("ready");
    return result;
  } catch (error) {
    setStatus("ready");
    showBanner(error instanceof ApiError ? `${doing}: ${error.message}` : String(error));
    return null;
  }
}

async function refreshNetwork(): Promise<void> {
  const payload = await guard(() => client.getNetwork(), "loading network");
  if (!payload) return;
  network = payload;
  view = initialViewState();
  const layout = await guard(() => client.runLayout("fruchterman_reingold"), "layout");
  if (layout) {
    view.positions = layout.positions;
    view.activeLayout = "fruchterman_reingold";
  }
  renderDataPanel();
  redraw();
  setStatus(`${payload.nodes.length} nodes, ${payload.links.length} links`
    + (payload.directed ? " (directed)" : ""));
}

// -- menus ------------------------------------------------------------

interface MenuItem {
  label: string;
  action: () => void;
}

function buildMenu(title: string, items: MenuItem[]): HTMLElement {
  const wrapper = document.createElement("div");
  wrapper.className = "menu";
  const button = document.createElement("button");
  button.textContent = title;
  wrapper.appendChild(button);
  const list = document.createElement("div");
  list.className = "menu-items";
  for (const item of items) {
    const entry = document.createElement("button");
    entry.textContent = item.label;
    entry.addEventListener("click", () => {
      list.classList.remove("open");
      item.action();
    });
    list.appendChild(entry);
  }
  wrapper.appendChild(list);
  button.addEventListener("click", () => list.classList.toggle("open"));
  return wrapper;
}

function promptParams(names: string[]): Record<string, unknown> | null {
  const params: Record<string, unknown> = {};
  for (const name of names) {
    const raw = window.prompt(`${name}?`);
    if (raw === null) return null;
    if (raw.trim() !== "") {
      const numeric = Number(raw);
      params[name] = Number.isFinite(numeric) ? numeric : raw;
    }
  }
  return params;
}

async function runMetric(name: string): Promise<void> {
  const needs: Record<string, string[]> = {
    katz: ["delta"], diffusion: ["delta", "path_limit"],
    decay: ["delta"], normalized_decay: ["delta"],
  };
  const params = promptParams(needs[name] ?? []);
  if (params === null) return;
  const result = await guard(() => client.runMetric(name, params), name);
  if (!result) return;
  if (result.values) {
    view.results.set(name, { kind: "values", values: result.values });
    showBanner(`${name}: stored ${result.values.length} node scores; bind via View`);
  } else if (result.hub && result.authority) {
    view.results.set("hub", { kind: "values", values: result.hub });
    view.results.set("authority", { kind: "values", values: result.authority });
    showBanner("hits: stored hub and authority scores");
  } else if (result.pairs) {
    showBanner(`${name}: top pair ${JSON.stringify(result.pairs[0] ?? [])}`);
  } else {
    showBanner(`${name}: ${JSON.stringify(result)}`);
  }
  renderDataPanel();
  redraw();
}

async function runCommunities(name: string): Promise<void> {
  const needs: Record<string, string[]> = {
    kmeans: ["k"], knsc1: ["k"], spectral_kmeans: ["k"], bigclam: ["k"],
    single_link: ["k"], complete_link: ["k"], average_link: ["k"],
  };
  const params = promptParams(needs[name] ?? []);
  if (params === null) return;
  const result = await guard(() => client.runCommunities(name, params), name);
  if (!result) return;
  view.results.set(name, { kind: "labels", labels: result.labels, k: result.k });
  view.colorBinding = { kind: "nodeColor", source: name };
  showBanner(`${name}: ${result.k} communities; nodes recolored`);
  renderDataPanel();
  redraw();
}

async function runLinkpred(name: string): Promise<void> {
  const needs: Record<string, string[]> = {
    katz: ["beta"], lhn_global: ["phi"],
    random_walk_restart: ["alpha"], flow_propagation: ["alpha"],
  };
  const params = promptParams(needs[name] ?? []);
  if (params === null) return;
  const result = await guard(() => client.runLinkpred(name, params), name);
  if (!result || !result.pairs) return;
  view.results.set(`linkpred:${name}`, { kind: "pairs", pairs: result.pairs });
  renderDataPanel();
  showBanner(`${name}: top ${result.pairs.length} candidate links in the Data panel`);
}

async function runLayout(name: string): Promise<void> {
  const result = await guard(() => client.runLayout(name), `layout ${name}`);
  if (!result) return;
  view.positions = result.positions;
  view.activeLayout = name;
  redraw();
}

function bindSize(source: string): void {
  if (!view.results.has(source)) {
    showBanner(`no stored node scores named ${source}; run it from Analysis first`);
    return;
  }
  view.sizeBinding = { kind: "nodeSize", source, range: [4, 16] };
  redraw();
}

function bindColor(source: string): void {
  if (!view.results.has(source)) {
    showBanner(`no stored result named ${source}; run it from Analysis first`);
    return;
  }
  view.colorBinding = { kind: "nodeColor", source };
  redraw();
}

function storedResultNames(kind: "values" | "labels"): string[] {
  return [...view.results.entries()]
    .filter(([, entry]) => entry.kind === kind)
    .map(([name]) => name);
}

async function setupMenus(): Promise<void> {
  const listing = await client.listAlgorithms().catch(() => null);
  const bar = document.getElementById("menubar") as HTMLElement;
  bar.innerHTML = "";

  bar.appendChild(buildMenu("Network", [
    { label: "Load file...", action: loadLocalFile },
    {
      label: "Load server path...",
      action: () => {
        const path = window.prompt("network file (relative to server directory)?");
        if (path) {
          void guard(() => client.uploadPath(path), "upload").then(refreshNetwork);
        }
      },
    },
    { label: "Export SVG", action: exportSvg },
  ]));

  const layoutItems = (listing?.layouts ?? ["fruchterman_reingold", "circular"]).map(
    (name) => ({ label: name, action: () => void runLayout(name) }),
  );
  bar.appendChild(buildMenu("View", [
    ...layoutItems,
    {
      label: "Bind node size to score...",
      action: () => {
        const names = storedResultNames("values");
        const source = window.prompt(`score name (${names.join(", ") || "none stored"})?`);
        if (source) bindSize(source);
      },
    },
    {
      label: "Bind node color to result...",
      action: () => {
        const names = [...view.results.keys()];
        const source = window.prompt(`result name (${names.join(", ") || "none stored"})?`);
        if (source) bindColor(source);
      },
    },
    {
      label: "Reset view",
      action: () => {
        view.transform = { scale: 1, offsetX: 0, offsetY: 0 };
        redraw();
      },
    },
  ]));

  bar.appendChild(buildMenu("Data", [
    { label: "Toggle attribute panel", action: () => dataPanel.classList.toggle("open") },
  ]));

  const analysisItems: MenuItem[] = [];
  for (const name of listing?.metrics ?? ["pagerank", "betweenness", "degree"]) {
    analysisItems.push({ label: `metric: ${name}`, action: () => void runMetric(name) });
  }
  for (const name of listing?.communities ?? ["fastgreedy"]) {
    analysisItems.push({ label: `communities: ${name}`, action: () => void runCommunities(name) });
  }
  for (const name of listing?.linkpred ?? ["common_neighbors"]) {
    analysisItems.push({ label: `linkpred: ${name}`, action: () => void runLinkpred(name) });
  }
  bar.appendChild(buildMenu("Analysis", analysisItems));
}

function loadLocalFile(): void {
  const input = document.createElement("input");
  input.type = "file";
  input.addEventListener("change", async () => {
    const file = input.files?.[0];
    if (!file) return;
    const content = await file.text();
    const uploaded = await guard(() => client.uploadContent(content), "upload");
    if (uploaded) await refreshNetwork();
  });
  input.click();
}

async function exportSvg(): Promise<void> {
  const styles: Record<string, unknown>[] = [];
  if (view.sizeBinding) {
    const entry = view.results.get(view.sizeBinding.source);
    if (entry?.kind === "values") {
      styles.push({
        channel: "nodeSize",
        source: { values: entry.values },
        range: view.sizeBinding.range,
      });
    }
  }
  const svg = await guard(() => client.renderSvg(styles), "render");
  if (!svg) return;
  const blob = new Blob([svg], { type: "image/svg+xml" });
  const anchor = document.createElement("a");
  anchor.href = URL.createObjectURL(blob);
  anchor.download = "network.svg";
  anchor.click();
  URL.revokeObjectURL(anchor.href);
}

// -- data panel ---------------------------------------------------------

function renderDataPanel(): void {
  if (!network) {
    dataPanel.innerHTML = "<p>No network loaded.</p>";
    return;
  }
  const names = attributeNames(network);
  const rows: string[] = ["<table><thead><tr><th>node</th>"];
  for (const name of names.node) rows.push(`<th>${name}</th>`);
  const scoreNames = storedResultNames("values");
  for (const name of scoreNames) rows.push(`<th>${name}</th>`);
  rows.push("</tr></thead><tbody>");
  const limit = Math.min(network.nodes.length, 200);
  for (let u = 0; u < limit; u += 1) {
    rows.push(`<tr><td>${u}</td>`);
    for (const name of names.node) {
      const value = network.nodes[u][name];
      rows.push(`<td>${value === null || value === undefined ? "" : String(value)}</td>`);
    }
    for (const name of scoreNames) {
      const entry = view.results.get(name);
      rows.push(`<td>${entry?.kind === "values" ? entry.values[u].toPrecision(6) : ""}</td>`);
    }
    rows.push("</tr>");
  }
  rows.push("</tbody></table>");
  dataPanel.innerHTML = rows.join("");
}

// -- canvas interaction ---------------------------------------------------

let dragging: { node: number } | { pan: [number, number] } | null = null;

canvas.addEventListener("mousedown", (event) => {
  if (!scene) return;
  const hit = hitTest(scene, event.offsetX, event.offsetY);
  if (hit !== null) {
    dragging = { node: hit };
    if (event.shiftKey) {
      view.selected.has(hit) ? view.selected.delete(hit) : view.selected.add(hit);
    } else {
      view.selected = new Set([hit]);
    }
    redraw();
  } else {
    dragging = { pan: [event.offsetX, event.offsetY] };
  }
});

canvas.addEventListener("mousemove", (event) => {
  if (!dragging) return;
  if ("node" in dragging && view.positions) {
    const [x, y] = toWorld(view.transform, canvas.width, canvas.height,
                           event.offsetX, event.offsetY);
    view.positions[dragging.node] = [x, y];
    redraw();
  } else if ("pan" in dragging) {
    const [lastX, lastY] = dragging.pan;
    view.transform = panBy(view.transform, event.offsetX - lastX, event.offsetY - lastY);
    dragging = { pan: [event.offsetX, event.offsetY] };
    redraw();
  }
});

window.addEventListener("mouseup", () => {
  if (dragging && "node" in dragging && view.positions) {
    void guard(() => client.savePositions(view.positions as [number, number][]),
               "saving positions");
  }
  dragging = null;
});

canvas.addEventListener("wheel", (event) => {
  event.preventDefault();
  view.transform = zoomAt(view.transform, canvas.width, canvas.height,
                          event.offsetX, event.offsetY, event.deltaY < 0 ? 1.15 : 1 / 1.15);
  redraw();
});

// -- boot -----------------------------------------------------------------

window.addEventListener("resize", resizeCanvas);
void (async () => {
  await setupMenus();
  resizeCanvas();
  try {
    await refreshNetwork();
  } catch {
    setStatus("no network loaded; use Network > Load");
  }
})();
