/**
 * HTTP scorer service implementing the harness's gateway contract:
 * POST /score {"s1", "s2"} -> {"score"} with the score in [0, 1].
 * GET /health answers 503 until the backend has warmed up. Requests with
 * missing or non-string fields get a 400. Inference is serialized through
 * one backend instance; express queues concurrent requests.
 */

import express, { Express } from "express";
import type { Server } from "node:http";
import { NliScorer } from "./nli.js";

export function createScorerApp(scorer: NliScorer, warmup?: Promise<void>): Express {
  const app = express();
  app.use(express.json());

  let warm = false;
  const warming = (warmup ?? scorer.warmup()).then(() => {
    warm = true;
  });
  let inFlight: Promise<unknown> = Promise.resolve();

  app.get("/health", (_req, res) => {
    if (!warm) {
      res.status(503).json({ status: "warming" });
      return;
    }
    res.json({ status: "ok", scorer: scorer.name });
  });

  app.post("/score", (req, res) => {
    const { s1, s2 } = req.body ?? {};
    if (typeof s1 !== "string" || typeof s2 !== "string") {
      res.status(400).json({ error: "body must be {s1: string, s2: string}" });
      return;
    }
    // Chain onto the previous request: one inference at a time.
    inFlight = inFlight
      .then(() => warming)
      .then(() => scorer.score(s1, s2))
      .then((score) => {
        if (!(score >= 0 && score <= 1)) {
          res.status(500).json({ error: `backend produced out-of-range score ${score}` });
          return;
        }
        res.json({ score });
      })
      .catch((err) => {
        res.status(500).json({ error: String(err) });
      });
  });

  return app;
}

export interface RunningService {
  server: Server;
  port: number;
  close(): Promise<void>;
}

export function serveScorer(
  scorer: NliScorer,
  port = 0,
  warmup?: Promise<void>,
): Promise<RunningService> {
  const app = createScorerApp(scorer, warmup);
  return new Promise((resolve, reject) => {
    const server = app.listen(port, () => {
      const address = server.address();
      const boundPort = typeof address === "object" && address ? address.port : port;
      resolve({
        server,
        port: boundPort,
        close: () =>
          new Promise<void>((done, fail) =>
            server.close((err) => (err ? fail(err) : done())),
          ),
      });
    });
    server.on("error", reject);
  });
}
