import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // let node's own loader handle opentype.js: its UMD bundle trips
    // vitest's module interop
    server: { deps: { external: [/opentype/] } },
  },
});
