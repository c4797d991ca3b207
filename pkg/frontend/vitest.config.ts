import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    environment: "node",
    // the live-session suite spawns the python server and, for the frame
    // cadence check, sits through a full wall-clock episode
    testTimeout: 90_000,
    hookTimeout: 30_000,
  },
});
