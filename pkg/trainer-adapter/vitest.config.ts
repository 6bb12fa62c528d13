import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // The integration suite spawns the python reward service.
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
