/** Parser for the /trace CSV payload and animation ordering of the poses. */

export interface TracePose {
  theta: number;
  branch: "ccw" | "cw";
  E: [number, number];
  H: [number, number];
  M: [number, number];
}

export interface ParsedTrace {
  poses: TracePose[];
  skipped: Array<{ theta: number; branch: string }>;
}

export function parseTraceCsv(csv: string): ParsedTrace {
  const lines = csv.trim().split("\n");
  if (lines[0] !== "theta,branch,Ex,Ey,Hx,Hy,Mx,My") {
    throw new Error(`unexpected trace header: ${lines[0]}`);
  }
  const poses: TracePose[] = [];
  const skipped: Array<{ theta: number; branch: string }> = [];
  for (const line of lines.slice(1)) {
    const cells = line.split(",");
    if (cells.length !== 8) {
      throw new Error(`malformed trace row: ${line}`);
    }
    const theta = Number(cells[0]);
    const branch = cells[1] as "ccw" | "cw";
    if (cells[2] === "") {
      skipped.push({ theta, branch });
      continue;
    }
    const nums = cells.slice(2).map(Number);
    if (nums.some((n) => !Number.isFinite(n))) {
      throw new Error(`non-numeric trace row: ${line}`);
    }
    poses.push({
      theta,
      branch,
      E: [nums[0], nums[1]],
      H: [nums[2], nums[3]],
      M: [nums[4], nums[5]],
    });
  }
  return { poses, skipped };
}

/**
 * Poses of one branch ordered for a rocking animation: the feasible arc may
 * wrap past theta = 0, so angles above pi are unwrapped to negative before
 * sorting. The animation ping-pongs along this order, reversing direction at
 * the feasibility limits.
 */
export function animationOrder(poses: TracePose[], branch: "ccw" | "cw"): TracePose[] {
  const arm = poses.filter((p) => p.branch === branch);
  const unwrap = (theta: number) => (theta > Math.PI ? theta - 2 * Math.PI : theta);
  return arm.sort((a, b) => unwrap(a.theta) - unwrap(b.theta));
}
