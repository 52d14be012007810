import { defineConfig } from 'vitest/config'

export default defineConfig({
  test: {
    environment: 'happy-dom',
    environmentOptions: {
      // The tests drive a real service on another local port; the UI itself
      // is served same-origin in production.
      happyDOM: {
        settings: { fetch: { disableSameOriginPolicy: true } },
      },
    },
    testTimeout: 30000,
    hookTimeout: 60000,
  },
})
