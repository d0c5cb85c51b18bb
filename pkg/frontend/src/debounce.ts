/** Trailing-edge debouncer: rapid slider scrubs collapse to one call. */

export const SLIDER_DEBOUNCE_MS = 150;

export class Debouncer {
  private handle: ReturnType<typeof setTimeout> | null = null;

  constructor(readonly delayMs: number = SLIDER_DEBOUNCE_MS) {}

  schedule(op: () => void): void {
    if (this.handle !== null) clearTimeout(this.handle);
    this.handle = setTimeout(() => {
      this.handle = null;
      op();
    }, this.delayMs);
  }

  cancel(): void {
    if (this.handle !== null) clearTimeout(this.handle);
    this.handle = null;
  }
}
