/** End-to-end against the real server: spawn `netmine serve`, load the
 * karate fixture, run PageRank, bind node size, run fast-greedy, recolor
 * by community — asserting node count, monotone size mapping, and
 * color count = k on the resulting scene. */

import { ChildProcess, spawn } from "node:child_process";
import { once } from "node:events";
import path from "node:path";
import { fileURLToPath } from "node:url";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { NetmineClient, NetworkPayload } from "../src/api.js";
import { buildScene } from "../src/scene.js";
import { initialViewState, ViewState } from "../src/state.js";

const FIXTURES = path.resolve(
  path.dirname(fileURLToPath(import.meta.url)), "..", "..", "tests", "fixtures");

let server: ChildProcess;
let client: NetmineClient;

async function startServer(): Promise<string> {
  server = spawn("netmine", ["serve", "--port", "0", "--dir", FIXTURES],
                 { stdio: ["ignore", "pipe", "pipe"] });
  const url = await new Promise<string>((resolve, reject) => {
    const timer = setTimeout(() => reject(new Error("server did not start")), 20_000);
    let seen = "";
    server.stdout?.on("data", (chunk: Buffer) => {
      seen += chunk.toString();
      const match = seen.match(/http:\/\/[0-9.]+:(\d+)\//);
      if (match) {
        clearTimeout(timer);
        resolve(`http://127.0.0.1:${match[1]}`);
      }
    });
    server.on("exit", (code) => reject(new Error(`server exited early (${code})`)));
  });
  return url;
}

beforeAll(async () => {
  const base = await startServer();
  client = new NetmineClient(base);
}, 30_000);

afterAll(async () => {
  if (server && server.exitCode === null) {
    server.kill("SIGINT");
    await Promise.race([once(server, "exit"), new Promise((r) => setTimeout(r, 3000))]);
    if (server.exitCode === null) server.kill("SIGKILL");
  }
});

describe("explorer session against the live server", () => {
  let network: NetworkPayload;
  const view: ViewState = initialViewState();

  it("loads the karate fixture and sees 34 nodes with attributes", async () => {
    const uploaded = await client.uploadPath("karate.gml");
    expect(uploaded.nodes).toBe(34);
    network = await client.getNetwork();
    expect(network.nodes).toHaveLength(34);
    expect(network.links).toHaveLength(78);
    expect(network.nodes[0].club).toBe("Mr. Hi");

    const layout = await client.runLayout("fruchterman_reingold");
    expect(layout.positions).toHaveLength(34);
    view.positions = layout.positions;

    const scene = buildScene(network, view, 800, 600);
    expect(scene.nodes).toHaveLength(34);
    expect(scene.links).toHaveLength(78);
  });

  it("runs PageRank server-side and binds node size monotonically", async () => {
    const result = await client.runMetric("pagerank");
    expect(result.values).toHaveLength(34);
    const total = result.values!.reduce((a, b) => a + b, 0);
    expect(Math.abs(total - 1)).toBeLessThan(1e-9);

    view.results.set("pagerank", { kind: "values", values: result.values! });
    view.sizeBinding = { kind: "nodeSize", source: "pagerank", range: [4, 16] };
    const scene = buildScene(network, view, 800, 600);

    const values = result.values!;
    for (let a = 0; a < 34; a += 1) {
      for (let b = a + 1; b < 34; b += 1) {
        if (values[a] > values[b]) {
          expect(scene.nodes[a].radius).toBeGreaterThan(scene.nodes[b].radius);
        } else if (values[a] < values[b]) {
          expect(scene.nodes[a].radius).toBeLessThan(scene.nodes[b].radius);
        } else {
          expect(scene.nodes[a].radius).toBeCloseTo(scene.nodes[b].radius, 10);
        }
      }
    }
  });

  it("runs fast-greedy and recolors with exactly k community colors", async () => {
    const result = await client.runCommunities("fastgreedy");
    expect(result.labels).toHaveLength(34);
    expect(result.k).toBeGreaterThanOrEqual(2);

    view.results.set("fastgreedy", { kind: "labels", labels: result.labels, k: result.k });
    view.colorBinding = { kind: "nodeColor", source: "fastgreedy" };
    const scene = buildScene(network, view, 800, 600);
    expect(scene.colorCount).toBe(result.k);
    for (let u = 0; u < 34; u += 1) {
      for (let v = u + 1; v < 34; v += 1) {
        if (result.labels[u] === result.labels[v]) {
          expect(scene.nodes[u].color).toBe(scene.nodes[v].color);
        }
      }
    }
  });

  it("persists dragged positions and renders SVG server-side", async () => {
    const positions = view.positions!;
    positions[0] = [0.5, 0.5];
    const stored = await client.savePositions(positions);
    expect(stored.stored).toBe(34);
    const svg = await client.renderSvg([
      { channel: "nodeSize", source: "metric:degree" },
    ]);
    expect(svg.match(/<circle/g)).toHaveLength(34);
    expect(svg.match(/<line/g)).toHaveLength(78);
  });

  it("surfaces unknown algorithms as API errors", async () => {
    await expect(client.runMetric("made_up")).rejects.toMatchObject({ status: 404 });
  });
});
