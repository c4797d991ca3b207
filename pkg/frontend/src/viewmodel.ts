/**
 * Render-side state, built purely from server messages. The view model
 * never simulates: positions, rewards and termination all come from
 * frames, so disabling rendering cannot change what the server records.
 */

import {
  Action,
  CloseMessage,
  DoneFlags,
  FALLBACK_GEOMETRY,
  FrameMessage,
  Geometry,
  OpenAck,
  Vehicle,
  actionName,
  isTerminal,
  parseDoneFlags,
} from "./protocol.js";

/** Fixed-capacity buffer that keeps the newest samples. */
export class RingBuffer<T> {
  private readonly items: T[] = [];
  private start = 0;

  constructor(readonly capacity: number) {
    if (capacity <= 0) throw new Error("capacity must be positive");
  }

  get length(): number {
    return this.items.length;
  }

  push(item: T): void {
    if (this.items.length < this.capacity) {
      this.items.push(item);
    } else {
      this.items[this.start] = item;
      this.start = (this.start + 1) % this.capacity;
    }
  }

  /** Oldest to newest. */
  toArray(): T[] {
    return this.items.slice(this.start).concat(this.items.slice(0, this.start));
  }

  clear(): void {
    this.items.length = 0;
    this.start = 0;
  }
}

/** One ego kinematics sample, buffered for the post-episode charts. */
export interface KinSample {
  t: number;
  v: number;
  accel: number;
  steer: number;
  yaw: number;
}

export interface HudState {
  speed: number;
  simTime: number;
  tick: number;
  rawAction: string;
  safeAction: string;
  shieldEngaged: boolean;
  cumulativeReward: number;
  cumulativeCost: number;
}

/** A 30 s episode at 10 Hz is 301 frames; leave generous headroom. */
const CHART_CAPACITY = 1024;

export class ViewModel {
  geometry: Geometry = FALLBACK_GEOMETRY;
  vehicles: Vehicle[] = [];
  tick = 0;
  simTime = 0;
  lastRaw: number = Action.IDLE;
  lastSafe: number = Action.IDLE;
  cumulativeReward = 0;
  cumulativeCost = 0;
  doneFlags: DoneFlags | null = null;
  closeMessage: CloseMessage | null = null;
  readonly samples = new RingBuffer<KinSample>(CHART_CAPACITY);

  /** Pixels per world meter for the top-down view. */
  pxPerMeter = 6;
  /** Horizontal screen anchor for the ego, as a fraction of the width. */
  egoAnchor = 0.3;

  applyOpenAck(ack: OpenAck): void {
    this.reset();
    if (ack.geometry) this.geometry = ack.geometry;
  }

  applyFrame(frame: FrameMessage): void {
    this.vehicles = frame.vehicles;
    this.tick = frame.tick;
    this.simTime = frame.sim_time_s;
    this.lastRaw = frame.last_action_raw;
    this.lastSafe = frame.last_action_safe;
    this.cumulativeReward += frame.reward;
    this.cumulativeCost += frame.cost;
    this.doneFlags = parseDoneFlags(frame.done_flags);
    const k = frame.kinematics;
    this.samples.push({
      t: frame.sim_time_s,
      v: k.v,
      accel: k.accel,
      steer: k.steer,
      yaw: k.yaw,
    });
  }

  applyClose(close: CloseMessage): void {
    this.closeMessage = close;
  }

  reset(): void {
    this.vehicles = [];
    this.tick = 0;
    this.simTime = 0;
    this.lastRaw = Action.IDLE;
    this.lastSafe = Action.IDLE;
    this.cumulativeReward = 0;
    this.cumulativeCost = 0;
    this.doneFlags = null;
    this.closeMessage = null;
    this.samples.clear();
  }

  get ego(): Vehicle | null {
    return this.vehicles.find((v) => v.is_ego) ?? null;
  }

  /** The last applied frame marked the episode as over. */
  get episodeOver(): boolean {
    return this.doneFlags !== null && isTerminal(this.doneFlags);
  }

  get shieldEngaged(): boolean {
    return this.lastRaw !== this.lastSafe;
  }

  get hud(): HudState {
    return {
      speed: this.ego?.v ?? 0,
      simTime: this.simTime,
      tick: this.tick,
      rawAction: actionName(this.lastRaw),
      safeAction: actionName(this.lastSafe),
      shieldEngaged: this.shieldEngaged,
      cumulativeReward: this.cumulativeReward,
      cumulativeCost: this.cumulativeCost,
    };
  }

  /**
   * World to screen mapping. The camera tracks the ego longitudinally,
   * keeping it at a fixed horizontal anchor, while the vertical axis stays
   * pinned to the road band so both lanes remain visible.
   */
  worldToScreen(
    wx: number,
    wy: number,
    canvasW: number,
    canvasH: number,
  ): [number, number] {
    const egoX = this.ego?.x ?? 0;
    const midY = (this.geometry.main_center + this.geometry.ramp_center) / 2;
    const sx = canvasW * this.egoAnchor + (wx - egoX) * this.pxPerMeter;
    const sy = canvasH / 2 + (wy - midY) * this.pxPerMeter;
    return [sx, sy];
  }

  /** Inverse of the horizontal part of `worldToScreen`. */
  screenToWorldX(sx: number, canvasW: number): number {
    const egoX = this.ego?.x ?? 0;
    return egoX + (sx - canvasW * this.egoAnchor) / this.pxPerMeter;
  }
}
