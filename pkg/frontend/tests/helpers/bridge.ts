/**
 * Test plumbing for the live-session suite: spawns the python session
 * server on an ephemeral port and provides a Node WebSocket factory for
 * the client under test.
 */

import { ChildProcess, execFile, spawn } from "node:child_process";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { promisify } from "node:util";

import WebSocket from "ws";

import { SocketLike } from "../../src/client.js";

const HELPER_DIR = dirname(fileURLToPath(import.meta.url));

const SERVER_SCRIPT = `
import asyncio
from rampmerge.bridge import BridgeServer

async def main():
    server = await BridgeServer("127.0.0.1", 0).serve()
    print(server.sockets[0].getsockname()[1], flush=True)
    await asyncio.get_running_loop().create_future()

asyncio.run(main())
`;

export interface LiveBridge {
  url: string;
  stop: () => Promise<void>;
}

export async function startBridge(): Promise<LiveBridge> {
  const proc: ChildProcess = spawn("python3", ["-c", SERVER_SCRIPT], {
    stdio: ["ignore", "pipe", "pipe"],
  });
  const stderr: string[] = [];
  proc.stderr!.on("data", (chunk) => stderr.push(String(chunk)));

  const port = await new Promise<number>((resolve, reject) => {
    let buffer = "";
    const timer = setTimeout(
      () => reject(new Error(`server did not start\n${stderr.join("")}`)),
      20_000,
    );
    proc.stdout!.on("data", (chunk) => {
      buffer += String(chunk);
      const line = buffer.split("\n")[0];
      if (buffer.includes("\n")) {
        clearTimeout(timer);
        resolve(Number(line));
      }
    });
    proc.on("exit", (code) => {
      clearTimeout(timer);
      reject(new Error(`server exited early (${code})\n${stderr.join("")}`));
    });
  });

  return {
    url: `ws://127.0.0.1:${port}`,
    stop: () =>
      new Promise<void>((resolve) => {
        proc.on("exit", () => resolve());
        proc.kill("SIGTERM");
        setTimeout(() => proc.kill("SIGKILL"), 3000).unref();
      }),
  };
}

/** Node-side WebSocket factory for SessionClient. */
export function nodeSocketFactory(url: string): SocketLike {
  return new WebSocket(url) as unknown as SocketLike;
}

/** The headless reference trace for a scripted seed and action list. */
export async function headlessTrace(
  seed: number,
  density: string,
  actions: string[],
): Promise<string> {
  const run = promisify(execFile);
  const { stdout } = await run(
    "python3",
    [join(HELPER_DIR, "headless_trace.py"), String(seed), density, actions.join(",")],
    { maxBuffer: 16 * 1024 * 1024 },
  );
  return stdout;
}
