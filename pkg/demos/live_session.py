"""
Driving an episode over the session protocol
============================================

The package serves episodes over a small WebSocket protocol: a client
opens a session, sends one decision per window (or lets a checkpoint
drive in replay mode), and receives a frame per simulation tick plus a
closing summary. The exported trace matches the library's own CSV
writer byte for byte, so anything recorded over the wire can be
compared directly against a headless rollout.
"""

import asyncio
import json

from rampmerge.bridge import BridgeServer
from rampmerge.vehicles import DiscreteAction

try:
    import websockets
except ImportError:
    raise SystemExit("this demo needs the websockets package")


async def main():
    bridge = BridgeServer("127.0.0.1", 0)
    server = await bridge.serve()
    port = server.sockets[0].getsockname()[1]
    print("serving on port", port)

    async with websockets.connect(f"ws://127.0.0.1:{port}") as ws:
        # open a scripted session: the client supplies every decision
        await ws.send(json.dumps({"type": "open", "config": {
            "mode": "scripted", "seed": 11, "density": "medium"}}))
        ack = json.loads(await ws.recv())
        print("ack:", {k: ack[k] for k in ("type", "mode", "tick")})
        first = json.loads(await ws.recv())
        ego = first["vehicles"][0]
        print("initial frame: tick %d, ego at (%.1f, %.1f) doing %.1f m/s, "
              "%d mainline cars"
              % (first["tick"], ego["x"], ego["y"], ego["v"],
                 len(first["vehicles"]) - 1))

        # request a few decisions; the shield may substitute, and each
        # window streams five tick frames
        done = False
        for step, name in enumerate(("left", "left", "faster", "idle")):
            await ws.send(json.dumps({"type": "action", "action": name}))
            await ws.recv()  # action ack
            frames = [json.loads(await ws.recv()) for _ in range(5)]
            last = frames[-1]
            ego = last["vehicles"][0]
            executed = DiscreteAction(last["last_action_safe"]).name
            print("window %d: sent %-6s executed %-6s  ego y=%.2f flags=%s"
                  % (step, name.upper(), executed, ego["y"],
                     last["done_flags"]))
            done = last["done_flags"] != "0000" and "1" in (
                last["done_flags"][0] + last["done_flags"][2]
                + last["done_flags"][3])
            if done:
                break

        # closing returns the episode totals and the full trace
        await ws.send(json.dumps({"type": "close"}))
        msg = json.loads(await ws.recv())
        while msg.get("type") != "close":
            msg = json.loads(await ws.recv())
        print("episode return %.2f, episode cost %.2f"
              % (msg["episode_return"], msg["episode_cost"]))
        trace = msg["trace_csv"]
        print("trace: %d lines, header: %s"
              % (trace.count("\n"), trace.splitlines()[0]))

    server.close()
    await server.wait_closed()


asyncio.run(main())
