/**
 * Session client: owns the socket, parses server records, and surfaces
 * them as typed callbacks. It holds no world state beyond connection
 * bookkeeping; rendering state lives in the view model.
 *
 * The socket is injected as a factory so tests can drive the client with
 * a stub or a Node WebSocket; the browser entry point passes the global
 * WebSocket constructor. Staleness is checked by the caller's own loop
 * via `checkStale`, keeping the client free of timers.
 */

import {
  Action,
  ActionAck,
  CloseMessage,
  ErrorMessage,
  FrameMessage,
  OpenAck,
  SessionConfig,
  parseServerMessage,
  serializeAction,
  serializeClose,
  serializeOpen,
  splitRecords,
} from "./protocol.js";

/** The slice of the WebSocket surface the client actually uses. */
export interface SocketLike {
  send(data: string): void;
  close(): void;
  // handler params are typed loosely so both the DOM WebSocket and the
  // Node "ws" implementation are assignable without wrappers
  onopen: ((ev: never) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev: never) => void) | null;
  onerror: ((ev: never) => void) | null;
}

export type SocketFactory = (url: string) => SocketLike;

export type ClientState = "idle" | "connecting" | "open" | "closed";

export interface SessionClientOptions {
  socketFactory: SocketFactory;
  /** Milliseconds without a frame before the session counts as stale. */
  staleAfterMs?: number;
  /** Clock used for staleness tracking; injectable for tests. */
  now?: () => number;
}

function messageText(data: unknown): string {
  if (typeof data === "string") return data;
  if (data instanceof ArrayBuffer) return new TextDecoder().decode(data);
  return String(data);
}

export class SessionClient {
  onOpenAck: ((ack: OpenAck) => void) | null = null;
  onActionAck: ((ack: ActionAck) => void) | null = null;
  onFrame: ((frame: FrameMessage) => void) | null = null;
  onClose: ((close: CloseMessage) => void) | null = null;
  onServerError: ((err: ErrorMessage) => void) | null = null;
  /** Fired when the socket drops before the server sent its close. */
  onDisconnect: (() => void) | null = null;
  /** Fired on stale transitions, true when frames stop arriving. */
  onStaleChange: ((stale: boolean) => void) | null = null;

  private readonly factory: SocketFactory;
  private readonly staleAfterMs: number;
  private readonly now: () => number;
  private socket: SocketLike | null = null;
  private stateValue: ClientState = "idle";
  private lastFrameAt = 0;
  private stale = false;
  private sessionEnded = false;
  private closeRequested = false;

  constructor(private readonly url: string, options: SessionClientOptions) {
    this.factory = options.socketFactory;
    this.staleAfterMs = options.staleAfterMs ?? 500;
    this.now = options.now ?? (() => Date.now());
  }

  get state(): ClientState {
    return this.stateValue;
  }

  get isStale(): boolean {
    return this.stale;
  }

  /** Open the socket and the session; safe to call again after a drop. */
  connect(config: SessionConfig): void {
    this.disposeSocket();
    this.stateValue = "connecting";
    this.sessionEnded = false;
    this.closeRequested = false;
    this.stale = false;
    const socket = this.factory(this.url);
    this.socket = socket;
    socket.onopen = () => {
      this.stateValue = "open";
      this.lastFrameAt = this.now();
      socket.send(serializeOpen(config));
    };
    socket.onmessage = (ev) => {
      for (const line of splitRecords(messageText(ev.data))) {
        this.dispatch(parseServerMessage(line));
      }
    };
    socket.onclose = () => {
      const dropped = !this.sessionEnded && !this.closeRequested;
      this.stateValue = "closed";
      this.setStale(false);
      if (dropped) this.onDisconnect?.();
    };
    socket.onerror = () => {
      // the close handler owns disconnect reporting; errors alone are noise
    };
  }

  /** Send one discrete action; returns the send timestamp. */
  sendAction(action: Action | string): number {
    if (!this.socket || this.stateValue !== "open") {
      throw new Error("no open session");
    }
    this.socket.send(serializeAction(action));
    return this.now();
  }

  /** Ask the server to finish the episode and report totals. */
  requestClose(): void {
    if (this.socket && this.stateValue === "open") {
      this.closeRequested = true;
      this.socket.send(serializeClose());
    }
  }

  /** Drop the connection without waiting for the server. */
  disconnect(): void {
    this.closeRequested = true;
    this.disposeSocket();
    this.stateValue = "closed";
  }

  /**
   * Staleness probe, called from the page's animation loop. Flags the
   * session stale when no frame arrived within the threshold while the
   * episode is still supposed to be streaming.
   */
  checkStale(nowMs: number = this.now()): boolean {
    const streaming = this.stateValue === "open" && !this.sessionEnded;
    this.setStale(streaming && nowMs - this.lastFrameAt > this.staleAfterMs);
    return this.stale;
  }

  private setStale(value: boolean): void {
    if (value !== this.stale) {
      this.stale = value;
      this.onStaleChange?.(value);
    }
  }

  private dispatch(msg: ReturnType<typeof parseServerMessage>): void {
    switch (msg.type) {
      case "ack":
        if (msg.ack === "open") this.onOpenAck?.(msg);
        else this.onActionAck?.(msg);
        return;
      case "frame":
        this.lastFrameAt = this.now();
        this.setStale(false);
        this.onFrame?.(msg);
        return;
      case "close":
        this.sessionEnded = true;
        this.setStale(false);
        this.onClose?.(msg);
        return;
      case "error":
        this.onServerError?.(msg);
        return;
    }
  }

  private disposeSocket(): void {
    if (this.socket) {
      this.socket.onopen = null;
      this.socket.onmessage = null;
      this.socket.onclose = null;
      this.socket.onerror = null;
      try {
        this.socket.close();
      } catch {
        // already closed
      }
      this.socket = null;
    }
  }
}
