/**
 * Page wiring: one session client, one view model, one animation loop.
 *
 * Socket reads and key events are plain event handlers that mutate the
 * view model; the requestAnimationFrame loop repaints from it, ticks the
 * IDLE sender and probes for staleness. Nothing else talks to the server.
 */

import { SessionClient } from "./client.js";
import { drawChart, extractSeries } from "./charts.js";
import { downloadTrace } from "./csv.js";
import { InputLoop } from "./keymap.js";
import { CloseMessage, SessionConfig } from "./protocol.js";
import { drawScene } from "./render.js";
import { ViewModel } from "./viewmodel.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const scene = el<HTMLCanvasElement>("scene");
const sceneCtx = scene.getContext("2d")!;

const hudSpeed = el<HTMLSpanElement>("hud-speed");
const hudTime = el<HTMLSpanElement>("hud-time");
const hudRaw = el<HTMLSpanElement>("hud-raw");
const hudSafe = el<HTMLSpanElement>("hud-safe");
const hudShield = el<HTMLSpanElement>("hud-shield");
const hudReward = el<HTMLSpanElement>("hud-reward");
const hudCost = el<HTMLSpanElement>("hud-cost");

const staleBanner = el<HTMLDivElement>("banner-stale");
const dropBanner = el<HTMLDivElement>("banner-disconnect");
const overlay = el<HTMLDivElement>("overlay-end");
const endTitle = el<HTMLHeadingElement>("end-title");
const endMetrics = el<HTMLParagraphElement>("end-metrics");

const urlInput = el<HTMLInputElement>("inp-url");
const densitySelect = el<HTMLSelectElement>("sel-density");
const seedInput = el<HTMLInputElement>("inp-seed");
const shieldInput = el<HTMLInputElement>("inp-shield");
const connectBtn = el<HTMLButtonElement>("btn-connect");
const reconnectBtn = el<HTMLButtonElement>("btn-reconnect");
const csvBtn = el<HTMLButtonElement>("btn-csv");
const againBtn = el<HTMLButtonElement>("btn-again");

const chartCanvases = ["chart-v", "chart-accel", "chart-steer", "chart-yaw"].map(
  (id) => el<HTMLCanvasElement>(id),
);

const vm = new ViewModel();
let activeClient: SessionClient | null = null;
let lastClose: CloseMessage | null = null;

const input = new InputLoop((action) => {
  if (activeClient?.state === "open") activeClient.sendAction(action);
});

function currentConfig(): SessionConfig {
  const config: SessionConfig = {
    mode: "human",
    density: densitySelect.value as SessionConfig["density"],
    use_shield: shieldInput.checked,
  };
  const seed = seedInput.value.trim();
  if (seed !== "") config.seed = Number(seed);
  return config;
}

function outcomeLabel(info: Record<string, boolean>): string {
  if (info.collided) return "collision";
  if (info.reached_goal) return "goal reached";
  if (info.timed_out) return "timed out";
  return "episode over";
}

function showEpisodeEnd(close: CloseMessage): void {
  endTitle.textContent = outcomeLabel(close.info);
  const merged = close.info.merged ? "merged" : "did not merge";
  endMetrics.textContent =
    `return ${close.episode_return.toFixed(2)}, ` +
    `cost ${close.episode_cost.toFixed(2)}, ${merged}, ` +
    `${vm.simTime.toFixed(1)} s driven`;
  const series = extractSeries(vm.samples.toArray());
  chartCanvases.forEach((canvas, i) => {
    const ctx = canvas.getContext("2d")!;
    drawChart(ctx, series[i], canvas.width, canvas.height);
  });
  overlay.hidden = false;
}

function wire(client: SessionClient): void {
  client.onOpenAck = (ack) => vm.applyOpenAck(ack);
  client.onFrame = (frame) => vm.applyFrame(frame);
  client.onClose = (close) => {
    lastClose = close;
    vm.applyClose(close);
    input.stop();
    showEpisodeEnd(close);
  };
  client.onServerError = (err) => console.error("server:", err.message);
  client.onDisconnect = () => {
    input.stop();
    dropBanner.hidden = false;
  };
  client.onStaleChange = (stale) => {
    staleBanner.hidden = !stale;
  };
}

function connect(): void {
  overlay.hidden = true;
  dropBanner.hidden = true;
  staleBanner.hidden = true;
  vm.reset();
  lastClose = null;
  activeClient?.disconnect();
  activeClient = new SessionClient(urlInput.value, {
    socketFactory: (url) => new WebSocket(url) as never,
  });
  wire(activeClient);
  activeClient.connect(currentConfig());
  input.start();
}

function updateHud(): void {
  const hud = vm.hud;
  hudSpeed.textContent = hud.speed.toFixed(1);
  hudTime.textContent = hud.simTime.toFixed(1);
  hudRaw.textContent = hud.rawAction;
  hudSafe.textContent = hud.safeAction;
  hudShield.hidden = !hud.shieldEngaged;
  hudReward.textContent = hud.cumulativeReward.toFixed(2);
  hudCost.textContent = hud.cumulativeCost.toFixed(2);
}

function frameLoop(): void {
  input.tick();
  activeClient?.checkStale(performance.now());
  drawScene(sceneCtx, vm, scene.width, scene.height);
  updateHud();
  requestAnimationFrame(frameLoop);
}

connectBtn.addEventListener("click", connect);
reconnectBtn.addEventListener("click", connect);
againBtn.addEventListener("click", connect);
csvBtn.addEventListener("click", () => {
  if (lastClose) downloadTrace(document, lastClose);
});

window.addEventListener("keydown", (ev) => {
  if (!overlay.hidden) return;
  if (input.handleKey(ev.key, ev.timeStamp)) ev.preventDefault();
});

window.addEventListener("beforeunload", () => activeClient?.requestClose());

requestAnimationFrame(frameLoop);
