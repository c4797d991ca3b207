/**
 * Wire types for the merge session server.
 *
 * The server speaks newline-delimited JSON over a WebSocket. Every message
 * carries a `type` field; the client sends open, action and close, the
 * server answers with ack, frame, error and close. Field names and units
 * mirror the server exactly, so a parsed frame is the render model and the
 * close message's trace is already the downloadable CSV.
 */

/** Simulation tick length in seconds (frames arrive at 10 Hz). */
export const SIM_DT = 0.1;

/** Simulation ticks per decision window (decisions run at 2 Hz). */
export const TICKS_PER_DECISION = 5;

/** Wall-clock length of one decision window in milliseconds. */
export const DECISION_WINDOW_MS = SIM_DT * TICKS_PER_DECISION * 1000;

/** Discrete driving actions, numbered as the server numbers them. */
export enum Action {
  LEFT = 0,
  RIGHT = 1,
  FASTER = 2,
  IDLE = 3,
  SLOWER = 4,
}

export const ACTION_NAMES = ["LEFT", "RIGHT", "FASTER", "IDLE", "SLOWER"] as const;

export function actionName(action: number): string {
  return ACTION_NAMES[action] ?? `#${action}`;
}

/** Static road layout sent back in the open ack. */
export interface Geometry {
  lane_width: number;
  merge_zone_start: number;
  merge_zone_end: number;
  goal_x: number;
  main_center: number;
  ramp_center: number;
  car_length: number;
  car_width: number;
}

/** Fallback layout for servers that predate the geometry field. */
export const FALLBACK_GEOMETRY: Geometry = {
  lane_width: 5,
  merge_zone_start: 80,
  merge_zone_end: 150,
  goal_x: 200,
  main_center: 0,
  ramp_center: 5,
  car_length: 5,
  car_width: 2,
};

export interface Vehicle {
  id: number;
  x: number;
  y: number;
  phi: number;
  v: number;
  is_ego: boolean;
}

export interface Kinematics {
  v: number;
  accel: number;
  steer: number;
  yaw: number;
}

export interface FrameMessage {
  type: "frame";
  session_id: string;
  tick: number;
  sim_time_s: number;
  vehicles: Vehicle[];
  last_action_raw: number;
  last_action_safe: number;
  reward: number;
  cost: number;
  done_flags: string;
  kinematics: Kinematics;
}

export interface OpenAck {
  type: "ack";
  ack: "open";
  session_id: string;
  mode: string;
  tick: number;
  geometry?: Geometry;
}

export interface ActionAck {
  type: "ack";
  ack: "action";
  session_id: string;
  tick: number;
  action: number;
}

export interface CloseMessage {
  type: "close";
  session_id: string;
  episode_return: number;
  episode_cost: number;
  info: Record<string, boolean>;
  trace_csv: string;
}

export interface ErrorMessage {
  type: "error";
  message: string;
}

export type ServerMessage =
  | OpenAck
  | ActionAck
  | FrameMessage
  | CloseMessage
  | ErrorMessage;

/** Episode scenario knobs accepted by the server's open message. */
export interface SessionConfig {
  mode?: "human" | "scripted" | "replay";
  seed?: number;
  density?: "low" | "medium" | "high";
  scenario?: Record<string, unknown>;
  sigma?: number;
  use_shield?: boolean;
  real_time?: boolean;
  checkpoint?: string;
  variant?: string;
}

/**
 * Parse one newline-delimited server record. Throws on records that are
 * not JSON or not one of the known message types, so transport bugs fail
 * loudly instead of rendering garbage.
 */
export function parseServerMessage(line: string): ServerMessage {
  const obj = JSON.parse(line) as { type?: unknown };
  switch (obj.type) {
    case "ack": {
      const ack = obj as OpenAck | ActionAck;
      if (ack.ack === "open" || ack.ack === "action") return ack;
      throw new Error(`unknown ack kind ${String((obj as { ack?: unknown }).ack)}`);
    }
    case "frame":
      return obj as FrameMessage;
    case "close":
      return obj as CloseMessage;
    case "error":
      return obj as ErrorMessage;
    default:
      throw new Error(`unknown message type ${String(obj.type)}`);
  }
}

/**
 * Split a socket payload into complete JSON records. The server sends one
 * record per WebSocket message, each ending in a newline, but nothing in
 * the protocol forbids batching, so the splitter tolerates both.
 */
export function splitRecords(payload: string): string[] {
  return payload
    .split("\n")
    .map((line) => line.trim())
    .filter((line) => line.length > 0);
}

/** Episode termination flags, decoded from the 4-character frame field. */
export interface DoneFlags {
  collided: boolean;
  merged: boolean;
  reachedGoal: boolean;
  timedOut: boolean;
}

export function parseDoneFlags(flags: string): DoneFlags {
  return {
    collided: flags[0] === "1",
    merged: flags[1] === "1",
    reachedGoal: flags[2] === "1",
    timedOut: flags[3] === "1",
  };
}

/** True when the frame's flags mark the episode as over. */
export function isTerminal(flags: DoneFlags): boolean {
  return flags.collided || flags.reachedGoal || flags.timedOut;
}

export function serializeOpen(config: SessionConfig): string {
  return JSON.stringify({ type: "open", config });
}

export function serializeAction(action: Action | string): string {
  return JSON.stringify({ type: "action", action });
}

export function serializeClose(): string {
  return JSON.stringify({ type: "close" });
}
