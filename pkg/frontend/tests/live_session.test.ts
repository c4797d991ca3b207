/**
 * Live tests against the real python session server: byte parity between
 * the client-driven scripted path and a headless rollout, the served
 * geometry block, protocol rejections, and wall-clock frame cadence for
 * a full human-mode episode.
 */

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import WebSocket from "ws";

import { SessionClient } from "../src/client.js";
import {
  CloseMessage,
  FrameMessage,
  OpenAck,
  parseDoneFlags,
} from "../src/protocol.js";
import { ViewModel } from "../src/viewmodel.js";
import {
  LiveBridge,
  headlessTrace,
  nodeSocketFactory,
  startBridge,
} from "./helpers/bridge.js";

let bridge: LiveBridge;

beforeAll(async () => {
  bridge = await startBridge();
});

afterAll(async () => {
  await bridge?.stop();
});

interface DriveResult {
  openAck: OpenAck;
  frames: FrameMessage[];
  frameArrivals: number[];
  sendDurations: number[];
  close: CloseMessage;
}

/**
 * Drive a scripted session through the real client: one action per
 * decision window, IDLE once the list is exhausted, resolved on the
 * server's close message.
 */
function driveScripted(
  url: string,
  config: Record<string, unknown>,
  actions: string[],
): Promise<DriveResult> {
  return new Promise((resolve, reject) => {
    const client = new SessionClient(url, { socketFactory: nodeSocketFactory });
    const frames: FrameMessage[] = [];
    const frameArrivals: number[] = [];
    const sendDurations: number[] = [];
    let openAck: OpenAck | null = null;
    let next = 0;
    let finished = false;

    const sendNext = () => {
      const name = next < actions.length ? actions[next++] : "IDLE";
      const before = performance.now();
      client.sendAction(name);
      sendDurations.push(performance.now() - before);
    };

    client.onOpenAck = (ack) => {
      openAck = ack;
    };
    client.onFrame = (frame) => {
      frames.push(frame);
      frameArrivals.push(performance.now());
      if (!finished && frame.tick % 5 === 0) sendNext();
    };
    client.onClose = (close) => {
      finished = true;
      client.disconnect();
      resolve({ openAck: openAck!, frames, frameArrivals, sendDurations, close });
    };
    client.onServerError = (err) => {
      if (!finished) {
        finished = true;
        client.disconnect();
        reject(new Error(`server error: ${err.message}`));
      }
    };
    client.onDisconnect = () => {
      if (!finished) reject(new Error("connection dropped mid-episode"));
    };
    client.connect(config);
  });
}

const PARITY_SEED = 17;
const PARITY_ACTIONS = [
  "SLOWER",
  "LEFT",
  "SLOWER",
  "LEFT",
  "LEFT",
  "FASTER",
  "IDLE",
  "LEFT",
  "FASTER",
  "FASTER",
];

describe("scripted session through the client", () => {
  it("produces a trace byte-identical to the headless rollout", async () => {
    const driven = await driveScripted(
      bridge.url,
      { mode: "scripted", seed: PARITY_SEED, density: "medium" },
      PARITY_ACTIONS,
    );
    const reference = await headlessTrace(PARITY_SEED, "medium", PARITY_ACTIONS);
    expect(driven.close.trace_csv.length).toBeGreaterThan(100);
    expect(driven.close.trace_csv).toBe(reference);
  });

  it("agrees with the view model's accumulated totals", async () => {
    const vm = new ViewModel();
    const driven = await driveScripted(
      bridge.url,
      { mode: "scripted", seed: PARITY_SEED, density: "medium" },
      PARITY_ACTIONS,
    );
    vm.applyOpenAck(driven.openAck);
    for (const frame of driven.frames) vm.applyFrame(frame);
    expect(vm.cumulativeReward).toBeCloseTo(driven.close.episode_return, 9);
    expect(vm.cumulativeCost).toBeCloseTo(driven.close.episode_cost, 9);
    expect(vm.episodeOver).toBe(true);
    const finalFlags = parseDoneFlags(driven.frames.at(-1)!.done_flags);
    expect(driven.close.info.collided).toBe(finalFlags.collided);
    expect(driven.close.info.merged).toBe(finalFlags.merged);
  });

  it("serves the road geometry in the open ack", async () => {
    const driven = await driveScripted(
      bridge.url,
      { mode: "scripted", seed: 1, density: "medium" },
      [],
    );
    expect(driven.openAck.geometry).toEqual({
      lane_width: 5.0,
      merge_zone_start: 80.0,
      merge_zone_end: 150.0,
      goal_x: 200.0,
      main_center: 0.0,
      ramp_center: 5.0,
      car_length: 5.0,
      car_width: 2.0,
    });
  });

  it("streams ticks contiguously from the initial frame", async () => {
    const driven = await driveScripted(
      bridge.url,
      { mode: "scripted", seed: PARITY_SEED, density: "medium" },
      PARITY_ACTIONS,
    );
    const ticks = driven.frames.map((f) => f.tick);
    expect(ticks[0]).toBe(0);
    for (let i = 1; i < ticks.length; i += 1) {
      expect(ticks[i]).toBe(ticks[i - 1] + 1);
    }
  });
});

describe("protocol rejections over the wire", () => {
  it("answers misuse with typed error messages", async () => {
    const ws = new WebSocket(bridge.url);
    const pending: unknown[] = [];
    const waiters: Array<(v: unknown) => void> = [];
    ws.on("message", (data) => {
      const obj = JSON.parse(String(data));
      const waiter = waiters.shift();
      if (waiter) waiter(obj);
      else pending.push(obj);
    });
    const next = async (): Promise<Record<string, unknown>> => {
      if (pending.length > 0) return pending.shift() as Record<string, unknown>;
      const value = await new Promise<unknown>((res) => waiters.push(res));
      return value as Record<string, unknown>;
    };
    await new Promise((res) => ws.on("open", res));

    ws.send(JSON.stringify({ type: "action", action: "IDLE" }));
    expect((await next()).message).toBe("no open session");

    ws.send(
      JSON.stringify({
        type: "open",
        config: { mode: "scripted", seed: 2, density: "medium" },
      }),
    );
    const ack = await next();
    expect(ack.ack).toBe("open");
    const first = (await next()) as unknown as FrameMessage;
    expect(first.type).toBe("frame");

    ws.send(JSON.stringify({ type: "open", config: {} }));
    expect((await next()).message).toBe("session already open");

    ws.send(JSON.stringify({ type: "action", action: "warp" }));
    const err = await next();
    expect(err.type).toBe("error");
    expect(String(err.message)).toMatch(/unknown action/);

    ws.close();
  });
});

describe("human session in real time", () => {
  it("sustains 10 Hz frames for a full 30 s episode with sub-50 ms sends", async () => {
    const result = await new Promise<DriveResult>((resolve, reject) => {
      const client = new SessionClient(bridge.url, {
        socketFactory: nodeSocketFactory,
      });
      const frames: FrameMessage[] = [];
      const frameArrivals: number[] = [];
      const sendDurations: number[] = [];
      let openAck: OpenAck | null = null;
      let finished = false;

      client.onOpenAck = (ack) => {
        openAck = ack;
      };
      client.onFrame = (frame) => {
        frames.push(frame);
        frameArrivals.push(performance.now());
        // hold SLOWER once per decision window; the ego parks on the
        // ramp and the episode runs to its 30 s cap
        if (frame.tick % 5 === 0 && !finished) {
          const before = performance.now();
          client.sendAction("SLOWER");
          sendDurations.push(performance.now() - before);
        }
      };
      client.onClose = (close) => {
        finished = true;
        client.disconnect();
        resolve({ openAck: openAck!, frames, frameArrivals, sendDurations, close });
      };
      client.onServerError = (err) => {
        if (!finished) reject(new Error(`server error: ${err.message}`));
      };
      client.onDisconnect = () => {
        if (!finished) reject(new Error("connection dropped mid-episode"));
      };
      client.connect({ mode: "human", seed: 5, density: "medium" });
    });

    expect(result.close.info.timed_out).toBe(true);

    // every simulation tick arrived, in order
    const streamed = result.frames.filter((f) => f.tick > 0);
    expect(streamed).toHaveLength(300);
    expect(streamed.map((f) => f.tick)).toEqual(
      Array.from({ length: 300 }, (_, i) => i + 1),
    );

    // wall-clock cadence: 300 frames over ~30 s, paced at 10 Hz
    const arrivals = result.frameArrivals.slice(result.frames.length - 300);
    const duration = (arrivals.at(-1)! - arrivals[0]) / 1000;
    expect(duration).toBeGreaterThan(28);
    expect(duration).toBeLessThan(34);
    const gaps: number[] = [];
    for (let i = 1; i < arrivals.length; i += 1) {
      gaps.push(arrivals[i] - arrivals[i - 1]);
    }
    const mean = gaps.reduce((a, b) => a + b, 0) / gaps.length;
    expect(mean).toBeGreaterThan(80);
    expect(mean).toBeLessThan(130);
    const under200 = gaps.filter((g) => g <= 200).length / gaps.length;
    expect(under200).toBeGreaterThanOrEqual(0.95);
    expect(Math.max(...gaps)).toBeLessThan(1000);

    // the action path stays well inside the 50 ms key-to-send budget
    expect(result.sendDurations.length).toBeGreaterThan(50);
    expect(Math.max(...result.sendDurations)).toBeLessThanOrEqual(50);
  }, 90_000);
});
