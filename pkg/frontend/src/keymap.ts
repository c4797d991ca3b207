/**
 * Keyboard capture. Arrow keys map to the four motion actions; a window
 * ticker sends IDLE whenever a full decision window passed with no key,
 * so the server's pending slot always reflects the driver's latest intent.
 *
 * Keys are sent the moment they arrive (the server keeps the last writer
 * within a window), which keeps key-to-send latency at the cost of a
 * single synchronous socket write.
 */

import { Action, DECISION_WINDOW_MS } from "./protocol.js";

export function actionForKey(key: string): Action | null {
  switch (key) {
    case "ArrowUp":
      return Action.FASTER;
    case "ArrowDown":
      return Action.SLOWER;
    case "ArrowLeft":
      return Action.LEFT;
    case "ArrowRight":
      return Action.RIGHT;
    default:
      return null;
  }
}

export interface InputLoopOptions {
  windowMs?: number;
  now?: () => number;
}

export class InputLoop {
  /** Key-to-send latencies in ms, one entry per forwarded key. */
  readonly latencies: number[] = [];

  private readonly windowMs: number;
  private readonly now: () => number;
  private windowStart: number;
  private sentThisWindow = false;
  private enabled = false;

  constructor(
    private readonly send: (action: Action) => void,
    options: InputLoopOptions = {},
  ) {
    this.windowMs = options.windowMs ?? DECISION_WINDOW_MS;
    this.now = options.now ?? (() => Date.now());
    this.windowStart = this.now();
  }

  /** Start forwarding input; resets the window clock. */
  start(): void {
    this.enabled = true;
    this.sentThisWindow = false;
    this.windowStart = this.now();
  }

  stop(): void {
    this.enabled = false;
  }

  /**
   * Handle one keydown. Returns true when the key was consumed, so the
   * caller can preventDefault only for driving keys. `keyAt` is the event
   * timestamp used for the latency record.
   */
  handleKey(key: string, keyAt: number = this.now()): boolean {
    if (!this.enabled) return false;
    const action = actionForKey(key);
    if (action === null) return false;
    this.send(action);
    this.latencies.push(this.now() - keyAt);
    this.sentThisWindow = true;
    return true;
  }

  /**
   * Window ticker, called from the page's animation loop. Sends IDLE for
   * every full window in which no key was forwarded.
   */
  tick(nowMs: number = this.now()): void {
    if (!this.enabled) return;
    if (nowMs - this.windowStart < this.windowMs) return;
    if (!this.sentThisWindow) this.send(Action.IDLE);
    this.sentThisWindow = false;
    this.windowStart = nowMs;
  }
}
