import { ProtocolError } from "./errors.js";

/** Parse JSONL text; blank lines are skipped, line numbers are 1-based. */
export function parseJsonl(text: string): unknown[] {
  const docs: unknown[] = [];
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i += 1) {
    const line = (lines[i] ?? "").trim();
    if (!line) continue;
    try {
      docs.push(JSON.parse(line));
    } catch {
      throw new ProtocolError(`line ${i + 1} is not valid JSON`);
    }
  }
  return docs;
}

export function writeJsonLine(stream: NodeJS.WriteStream, payload: unknown): void {
  stream.write(`${JSON.stringify(payload)}\n`);
}
