/** Frozen service responses, captured verbatim from a live backend run
 * of the three-sphere intersection request. Tests replay these instead
 * of talking to a server, so every number they assert on is a genuine
 * API artifact rather than something recomputed in the UI.
 */
import type { CompileResponse, ErrorDetail, TaskRecord } from "../src/types.js";

/** Completed task record: plan, trace, script, code, scene, outputs. */
export const flagshipTask: TaskRecord = {
  "id": "6a04c51247f4",
  "status": "succeeded",
  "created": 1786895241.4691436,
  "request": {
    "description": "Visualization formula S = C - 1/2 r^2 einf: In conformal space, create three spheres S1, S2, S3 with centers at X1 (0, 0, 0), X2 (0, 0.4, 0), and X3 (0, 0.45, 0.2) with radii of 0.5, 0.4, and 0.3, respectively, S1, S2, S3 are visualized in blue, red, and green, respectively. Finally, calculate the intersection points x4 and x5 of the three balls and visualize them in yellow. I need Python code.",
    "formula": "",
    "space": "cga3d",
    "language": "python"
  },
  "plan": {
    "description": "Visualization formula S = C - 1/2 r^2 einf: In conformal space, create three spheres S1, S2, S3 with centers at X1 (0, 0, 0), X2 (0, 0.4, 0), and X3 (0, 0.45, 0.2) with radii of 0.5, 0.4, and 0.3, respectively, S1, S2, S3 are visualized in blue, red, and green, respectively. Finally, calculate the intersection points x4 and x5 of the three balls and visualize them in yellow. I need Python code.",
    "formula": "",
    "space": "cga3d",
    "language": "python",
    "subtasks": [
      {
        "task_id": "t1",
        "task_name": "create_center_points",
        "task_description": "Create point X1 at (0, 0, 0); Create point X2 at (0, 0.4, 0); Create point X3 at (0, 0.45, 0.2).",
        "variable_names": [
          "X1",
          "X2",
          "X3"
        ],
        "category": "object_creation",
        "code_language": "python",
        "ga_type": "cga3d",
        "specific_values": {
          "x1x": 0.0,
          "x1y": 0.0,
          "x1z": 0.0,
          "x2x": 0.0,
          "x2y": 0.4,
          "x2z": 0.0,
          "x3x": 0.0,
          "x3y": 0.45,
          "x3z": 0.2
        },
        "visualization": [],
        "depends_on": []
      },
      {
        "task_id": "t2",
        "task_name": "create_spheres",
        "task_description": "Create sphere S1 with center X1 and radius 0.5; Create sphere S2 with center X2 and radius 0.4; Create sphere S3 with center X3 and radius 0.3.",
        "variable_names": [
          "S1",
          "S2",
          "S3"
        ],
        "category": "object_creation",
        "code_language": "python",
        "ga_type": "cga3d",
        "specific_values": {
          "s1r": 0.5,
          "s2r": 0.4,
          "s3r": 0.3
        },
        "visualization": [
          [
            "S1",
            "blue"
          ],
          [
            "S2",
            "red"
          ],
          [
            "S3",
            "green"
          ]
        ],
        "depends_on": [
          "t1"
        ]
      },
      {
        "task_id": "t3",
        "task_name": "intersect_spheres",
        "task_description": "Intersect spheres S1, S2 and S3 into point pair pp1; split pp1 into points x4 and x5.",
        "variable_names": [
          "pp1",
          "x4",
          "x5"
        ],
        "category": "element_operation",
        "code_language": "python",
        "ga_type": "cga3d",
        "specific_values": {},
        "visualization": [
          [
            "x4",
            "yellow"
          ],
          [
            "x5",
            "yellow"
          ]
        ],
        "depends_on": [
          "t2"
        ]
      }
    ],
    "trace": [
      {
        "phase": "observation",
        "text": "matched three sphere centers X1, X2, X3",
        "seq": 0
      },
      {
        "phase": "thoughts",
        "text": "the spheres need their center points first",
        "seq": 1
      },
      {
        "phase": "action",
        "text": "subtask t1 creates points X1, X2, X3",
        "seq": 2
      },
      {
        "phase": "observation",
        "text": "matched three spheres S1, S2, S3 with radii 0.5, 0.4, 0.3",
        "seq": 3
      },
      {
        "phase": "thoughts",
        "text": "each sphere is its center point shifted along the infinity direction",
        "seq": 4
      },
      {
        "phase": "action",
        "text": "subtask t2 creates spheres S1, S2, S3",
        "seq": 5
      },
      {
        "phase": "observation",
        "text": "matched intersection points x4 and x5 of the three spheres",
        "seq": 6
      },
      {
        "phase": "thoughts",
        "text": "three spheres meet in a point pair, which splits into two points",
        "seq": 7
      },
      {
        "phase": "action",
        "text": "subtask t3 intersects S1, S2, S3 and splits pp1",
        "seq": 8
      }
    ]
  },
  "error": null,
  "script": "x1x = 0;\nx1y = 0;\nx1z = 0;\nx2x = 0;\nx2y = 0.4;\nx2z = 0;\nx3x = 0;\nx3y = 0.45;\nx3z = 0.2;\ns1r = 0.5;\ns2r = 0.4;\ns3r = 0.3;\nX1 = createPoint(x1x, x1y, x1z);\nX2 = createPoint(x2x, x2y, x2z);\nX3 = createPoint(x3x, x3y, x3z);\nS1 = X1 - 0.5 * (s1r * s1r) * einf;\nS2 = X2 - 0.5 * (s2r * s2r) * einf;\nS3 = X3 - 0.5 * (s3r * s3r) * einf;\npp1 = S1 ^ S2 ^ S3;\nx4 = pairPointA(pp1);\nx5 = pairPointB(pp1);\n:S1 blue;\n:S2 red;\n:S3 green;\n:x4 yellow;\n:x5 yellow;\n",
  "code": "import math\n\n# --- assignments ---\nx1x = 0.0\nx1y = 0.0\nx1z = 0.0\nx2x = 0.0\nx2y = 0.4\nx2z = 0.0\nx3x = 0.0\nx3y = 0.45\nx3z = 0.2\ns1r = 0.5\ns2r = 0.4\ns3r = 0.3\n\n# --- optimization code ---\nX1_1 = x1x  # e1\nX1_2 = x1y  # e2\nX1_4 = x1z  # e3\nX1_8 = 0.5 * (x1x**2 + x1y**2 + x1z**2) - 0.5  # e4\nX1_16 = 0.5 * (x1x**2 + x1y**2 + x1z**2) + 0.5  # e5\nX2_1 = x2x  # e1\nX2_2 = x2y  # e2\nX2_4 = x2z  # e3\nX2_8 = 0.5 * (x2x**2 + x2y**2 + x2z**2) - 0.5  # e4\nX2_16 = 0.5 * (x2x**2 + x2y**2 + x2z**2) + 0.5  # e5\nX3_1 = x3x  # e1\nX3_2 = x3y  # e2\nX3_4 = x3z  # e3\nX3_8 = 0.5 * (x3x**2 + x3y**2 + x3z**2) - 0.5  # e4\nX3_16 = 0.5 * (x3x**2 + x3y**2 + x3z**2) + 0.5  # e5\nS1_1 = X1_1  # e1\nS1_2 = X1_2  # e2\nS1_4 = X1_4  # e3\nS1_8 = X1_8 - 0.5 * s1r**2  # e4\nS1_16 = X1_16 - 0.5 * s1r**2  # e5\nS2_1 = X2_1  # e1\nS2_2 = X2_2  # e2\nS2_4 = X2_4  # e3\nS2_8 = X2_8 - 0.5 * s2r**2  # e4\nS2_16 = X2_16 - 0.5 * s2r**2  # e5\nS3_1 = X3_1  # e1\nS3_2 = X3_2  # e2\nS3_4 = X3_4  # e3\nS3_8 = X3_8 - 0.5 * s3r**2  # e4\nS3_16 = X3_16 - 0.5 * s3r**2  # e5\npp1_7 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_4 - (S1_1 * S2_4 - S1_4 * S2_1) * S3_2 + (S1_2 * S2_4 - S1_4 * S2_2) * S3_1  # e123\npp1_11 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_8 - (S1_1 * S2_8 - S1_8 * S2_1) * S3_2 + (S1_2 * S2_8 - S1_8 * S2_2) * S3_1  # e124\npp1_13 = (S1_1 * S2_4 - S1_4 * S2_1) * S3_8 - (S1_1 * S2_8 - S1_8 * S2_1) * S3_4 + (S1_4 * S2_8 - S1_8 * S2_4) * S3_1  # e134\npp1_14 = (S1_2 * S2_4 - S1_4 * S2_2) * S3_8 - (S1_2 * S2_8 - S1_8 * S2_2) * S3_4 + (S1_4 * S2_8 - S1_8 * S2_4) * S3_2  # e234\npp1_19 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_2 + (S1_2 * S2_16 - S1_16 * S2_2) * S3_1  # e125\npp1_21 = (S1_1 * S2_4 - S1_4 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_4 + (S1_4 * S2_16 - S1_16 * S2_4) * S3_1  # e135\npp1_22 = (S1_2 * S2_4 - S1_4 * S2_2) * S3_16 - (S1_2 * S2_16 - S1_16 * S2_2) * S3_4 + (S1_4 * S2_16 - S1_16 * S2_4) * S3_2  # e235\npp1_25 = (S1_1 * S2_8 - S1_8 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_1  # e145\npp1_26 = (S1_2 * S2_8 - S1_8 * S2_2) * S3_16 - (S1_2 * S2_16 - S1_16 * S2_2) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_2  # e245\npp1_28 = (S1_4 * S2_8 - S1_8 * S2_4) * S3_16 - (S1_4 * S2_16 - S1_16 * S2_4) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_4  # e345\nx4_1 = -(pp1_14 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_22 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_26 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_28 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e1\nx4_2 = pp1_13 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_25 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_28 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e2\nx4_4 = -(pp1_11 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_19 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_25 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_26 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e3\nx4_8 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_19 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_22 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e4\nx4_16 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_11 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_13 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_14 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e5\nx5_1 = -(pp1_14 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_22 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_26 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_28 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e1\nx5_2 = pp1_13 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_25 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_28 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e2\nx5_4 = -(pp1_11 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_19 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_25 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_26 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e3\nx5_8 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_19 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_22 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e4\nx5_16 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_11 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_13 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_14 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e5\n\n# --- visualization ---\nvisualization = [\n    ('S1', (0.0, 0.0, 1.0)),\n    ('S2', (1.0, 0.0, 0.0)),\n    ('S3', (0.0, 1.0, 0.0)),\n    ('x4', (1.0, 1.0, 0.0)),\n    ('x5', (1.0, 1.0, 0.0)),\n]\n",
  "scene": {
    "version": 1,
    "space": "cga3d",
    "objects": [
      {
        "id": "S1",
        "kind": "sphere",
        "color": {
          "r": 0.0,
          "g": 0.0,
          "b": 1.0
        },
        "label": "S1",
        "params": {
          "cx": 0.0,
          "cy": 0.0,
          "cz": 0.0,
          "r": 0.5
        }
      },
      {
        "id": "S2",
        "kind": "sphere",
        "color": {
          "r": 1.0,
          "g": 0.0,
          "b": 0.0
        },
        "label": "S2",
        "params": {
          "cx": 0.0,
          "cy": 0.4,
          "cz": 0.0,
          "r": 0.4
        }
      },
      {
        "id": "S3",
        "kind": "sphere",
        "color": {
          "r": 0.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "S3",
        "params": {
          "cx": 0.0,
          "cy": 0.45000000000000007,
          "cz": 0.20000000000000004,
          "r": 0.30000000000000004
        }
      },
      {
        "id": "x4",
        "kind": "point",
        "color": {
          "r": 1.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "x4",
        "params": {
          "x": -0.2458840872748788,
          "y": 0.3125,
          "z": 0.30312499999999964
        }
      },
      {
        "id": "x5",
        "kind": "point",
        "color": {
          "r": 1.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "x5",
        "params": {
          "x": 0.2458840872748788,
          "y": 0.3125,
          "z": 0.30312499999999964
        }
      }
    ]
  },
  "outputs": {
    "S1": {
      "e4": -0.625,
      "e5": 0.375
    },
    "S2": {
      "e2": 0.4,
      "e4": -0.5,
      "e5": 0.5
    },
    "S3": {
      "e2": 0.45,
      "e3": 0.2,
      "e4": -0.42374999999999996,
      "e5": 0.5762499999999999
    },
    "x4": {
      "e1": -0.24588408727487876,
      "e2": 0.31249999999999994,
      "e3": 0.3031249999999996,
      "e4": -0.375,
      "e5": 0.6249999999999999
    },
    "x5": {
      "e1": 0.24588408727487876,
      "e2": 0.31249999999999994,
      "e3": 0.3031249999999996,
      "e4": -0.375,
      "e5": 0.6249999999999999
    }
  },
  "warnings": [],
  "trace": [
    {
      "phase": "observation",
      "text": "matched three sphere centers X1, X2, X3",
      "seq": 0
    },
    {
      "phase": "thoughts",
      "text": "the spheres need their center points first",
      "seq": 1
    },
    {
      "phase": "action",
      "text": "subtask t1 creates points X1, X2, X3",
      "seq": 2
    },
    {
      "phase": "observation",
      "text": "matched three spheres S1, S2, S3 with radii 0.5, 0.4, 0.3",
      "seq": 3
    },
    {
      "phase": "thoughts",
      "text": "each sphere is its center point shifted along the infinity direction",
      "seq": 4
    },
    {
      "phase": "action",
      "text": "subtask t2 creates spheres S1, S2, S3",
      "seq": 5
    },
    {
      "phase": "observation",
      "text": "matched intersection points x4 and x5 of the three spheres",
      "seq": 6
    },
    {
      "phase": "thoughts",
      "text": "three spheres meet in a point pair, which splits into two points",
      "seq": 7
    },
    {
      "phase": "action",
      "text": "subtask t3 intersects S1, S2, S3 and splits pp1",
      "seq": 8
    },
    {
      "phase": "observation",
      "text": "subtask t1 extracted 3 operations, 9 bindings, 0 draws",
      "seq": 9
    },
    {
      "phase": "thoughts",
      "text": "the assembled script validated on the first attempt",
      "seq": 10
    },
    {
      "phase": "action",
      "text": "appended subtask t1 statements to the script",
      "seq": 11
    },
    {
      "phase": "observation",
      "text": "subtask t2 extracted 3 operations, 3 bindings, 3 draws",
      "seq": 12
    },
    {
      "phase": "thoughts",
      "text": "the assembled script validated on the first attempt",
      "seq": 13
    },
    {
      "phase": "action",
      "text": "appended subtask t2 statements to the script",
      "seq": 14
    },
    {
      "phase": "observation",
      "text": "subtask t3 extracted 2 operations, 0 bindings, 2 draws",
      "seq": 15
    },
    {
      "phase": "thoughts",
      "text": "the assembled script validated on the first attempt",
      "seq": 16
    },
    {
      "phase": "action",
      "text": "appended subtask t3 statements to the script",
      "seq": 17
    },
    {
      "phase": "observation",
      "text": "final script has 26 statements",
      "seq": 18
    },
    {
      "phase": "thoughts",
      "text": "compilation produced 50 numeric steps",
      "seq": 19
    },
    {
      "phase": "action",
      "text": "emitted python code and a scene with 5 objects",
      "seq": 20
    }
  ]
};

/** Stateless compile of the same script with no overrides. */
export const flagshipCompile: CompileResponse = {
  "code": "import math\n\n# --- assignments ---\nx1x = 0.0\nx1y = 0.0\nx1z = 0.0\nx2x = 0.0\nx2y = 0.4\nx2z = 0.0\nx3x = 0.0\nx3y = 0.45\nx3z = 0.2\ns1r = 0.5\ns2r = 0.4\ns3r = 0.3\n\n# --- optimization code ---\nX1_1 = x1x  # e1\nX1_2 = x1y  # e2\nX1_4 = x1z  # e3\nX1_8 = 0.5 * (x1x**2 + x1y**2 + x1z**2) - 0.5  # e4\nX1_16 = 0.5 * (x1x**2 + x1y**2 + x1z**2) + 0.5  # e5\nX2_1 = x2x  # e1\nX2_2 = x2y  # e2\nX2_4 = x2z  # e3\nX2_8 = 0.5 * (x2x**2 + x2y**2 + x2z**2) - 0.5  # e4\nX2_16 = 0.5 * (x2x**2 + x2y**2 + x2z**2) + 0.5  # e5\nX3_1 = x3x  # e1\nX3_2 = x3y  # e2\nX3_4 = x3z  # e3\nX3_8 = 0.5 * (x3x**2 + x3y**2 + x3z**2) - 0.5  # e4\nX3_16 = 0.5 * (x3x**2 + x3y**2 + x3z**2) + 0.5  # e5\nS1_1 = X1_1  # e1\nS1_2 = X1_2  # e2\nS1_4 = X1_4  # e3\nS1_8 = X1_8 - 0.5 * s1r**2  # e4\nS1_16 = X1_16 - 0.5 * s1r**2  # e5\nS2_1 = X2_1  # e1\nS2_2 = X2_2  # e2\nS2_4 = X2_4  # e3\nS2_8 = X2_8 - 0.5 * s2r**2  # e4\nS2_16 = X2_16 - 0.5 * s2r**2  # e5\nS3_1 = X3_1  # e1\nS3_2 = X3_2  # e2\nS3_4 = X3_4  # e3\nS3_8 = X3_8 - 0.5 * s3r**2  # e4\nS3_16 = X3_16 - 0.5 * s3r**2  # e5\npp1_7 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_4 - (S1_1 * S2_4 - S1_4 * S2_1) * S3_2 + (S1_2 * S2_4 - S1_4 * S2_2) * S3_1  # e123\npp1_11 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_8 - (S1_1 * S2_8 - S1_8 * S2_1) * S3_2 + (S1_2 * S2_8 - S1_8 * S2_2) * S3_1  # e124\npp1_13 = (S1_1 * S2_4 - S1_4 * S2_1) * S3_8 - (S1_1 * S2_8 - S1_8 * S2_1) * S3_4 + (S1_4 * S2_8 - S1_8 * S2_4) * S3_1  # e134\npp1_14 = (S1_2 * S2_4 - S1_4 * S2_2) * S3_8 - (S1_2 * S2_8 - S1_8 * S2_2) * S3_4 + (S1_4 * S2_8 - S1_8 * S2_4) * S3_2  # e234\npp1_19 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_2 + (S1_2 * S2_16 - S1_16 * S2_2) * S3_1  # e125\npp1_21 = (S1_1 * S2_4 - S1_4 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_4 + (S1_4 * S2_16 - S1_16 * S2_4) * S3_1  # e135\npp1_22 = (S1_2 * S2_4 - S1_4 * S2_2) * S3_16 - (S1_2 * S2_16 - S1_16 * S2_2) * S3_4 + (S1_4 * S2_16 - S1_16 * S2_4) * S3_2  # e235\npp1_25 = (S1_1 * S2_8 - S1_8 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_1  # e145\npp1_26 = (S1_2 * S2_8 - S1_8 * S2_2) * S3_16 - (S1_2 * S2_16 - S1_16 * S2_2) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_2  # e245\npp1_28 = (S1_4 * S2_8 - S1_8 * S2_4) * S3_16 - (S1_4 * S2_16 - S1_16 * S2_4) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_4  # e345\nx4_1 = -(pp1_14 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_22 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_26 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_28 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e1\nx4_2 = pp1_13 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_25 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_28 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e2\nx4_4 = -(pp1_11 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_19 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_25 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_26 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e3\nx4_8 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_19 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_22 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e4\nx4_16 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_11 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_13 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_14 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e5\nx5_1 = -(pp1_14 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_22 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_26 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_28 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e1\nx5_2 = pp1_13 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_25 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_28 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e2\nx5_4 = -(pp1_11 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_19 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_25 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_26 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e3\nx5_8 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_19 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_22 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e4\nx5_16 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_11 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_13 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_14 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e5\n\n# --- visualization ---\nvisualization = [\n    ('S1', (0.0, 0.0, 1.0)),\n    ('S2', (1.0, 0.0, 0.0)),\n    ('S3', (0.0, 1.0, 0.0)),\n    ('x4', (1.0, 1.0, 0.0)),\n    ('x5', (1.0, 1.0, 0.0)),\n]\n",
  "scene": {
    "version": 1,
    "space": "cga3d",
    "objects": [
      {
        "id": "S1",
        "kind": "sphere",
        "color": {
          "r": 0.0,
          "g": 0.0,
          "b": 1.0
        },
        "label": "S1",
        "params": {
          "cx": 0.0,
          "cy": 0.0,
          "cz": 0.0,
          "r": 0.5
        }
      },
      {
        "id": "S2",
        "kind": "sphere",
        "color": {
          "r": 1.0,
          "g": 0.0,
          "b": 0.0
        },
        "label": "S2",
        "params": {
          "cx": 0.0,
          "cy": 0.4,
          "cz": 0.0,
          "r": 0.4
        }
      },
      {
        "id": "S3",
        "kind": "sphere",
        "color": {
          "r": 0.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "S3",
        "params": {
          "cx": 0.0,
          "cy": 0.45000000000000007,
          "cz": 0.20000000000000004,
          "r": 0.30000000000000004
        }
      },
      {
        "id": "x4",
        "kind": "point",
        "color": {
          "r": 1.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "x4",
        "params": {
          "x": -0.2458840872748788,
          "y": 0.3125,
          "z": 0.30312499999999964
        }
      },
      {
        "id": "x5",
        "kind": "point",
        "color": {
          "r": 1.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "x5",
        "params": {
          "x": 0.2458840872748788,
          "y": 0.3125,
          "z": 0.30312499999999964
        }
      }
    ]
  },
  "inputs": {
    "x1x": 0.0,
    "x1y": 0.0,
    "x1z": 0.0,
    "x2x": 0.0,
    "x2y": 0.4,
    "x2z": 0.0,
    "x3x": 0.0,
    "x3y": 0.45,
    "x3z": 0.2,
    "s1r": 0.5,
    "s2r": 0.4,
    "s3r": 0.3
  },
  "outputs": {
    "S1": {
      "e4": -0.625,
      "e5": 0.375
    },
    "S2": {
      "e2": 0.4,
      "e4": -0.5,
      "e5": 0.5
    },
    "S3": {
      "e2": 0.45,
      "e3": 0.2,
      "e4": -0.42374999999999996,
      "e5": 0.5762499999999999
    },
    "x4": {
      "e1": -0.24588408727487876,
      "e2": 0.31249999999999994,
      "e3": 0.3031249999999996,
      "e4": -0.375,
      "e5": 0.6249999999999999
    },
    "x5": {
      "e1": 0.24588408727487876,
      "e2": 0.31249999999999994,
      "e3": 0.3031249999999996,
      "e4": -0.375,
      "e5": 0.6249999999999999
    }
  },
  "warnings": []
};

/** The same compile steered to s3r = 0.35: intersection points move. */
export const steeredCompile: CompileResponse = {
  "code": "import math\n\n# --- assignments ---\nx1x = 0.0\nx1y = 0.0\nx1z = 0.0\nx2x = 0.0\nx2y = 0.4\nx2z = 0.0\nx3x = 0.0\nx3y = 0.45\nx3z = 0.2\ns1r = 0.5\ns2r = 0.4\ns3r = 0.3\n\n# --- optimization code ---\nX1_1 = x1x  # e1\nX1_2 = x1y  # e2\nX1_4 = x1z  # e3\nX1_8 = 0.5 * (x1x**2 + x1y**2 + x1z**2) - 0.5  # e4\nX1_16 = 0.5 * (x1x**2 + x1y**2 + x1z**2) + 0.5  # e5\nX2_1 = x2x  # e1\nX2_2 = x2y  # e2\nX2_4 = x2z  # e3\nX2_8 = 0.5 * (x2x**2 + x2y**2 + x2z**2) - 0.5  # e4\nX2_16 = 0.5 * (x2x**2 + x2y**2 + x2z**2) + 0.5  # e5\nX3_1 = x3x  # e1\nX3_2 = x3y  # e2\nX3_4 = x3z  # e3\nX3_8 = 0.5 * (x3x**2 + x3y**2 + x3z**2) - 0.5  # e4\nX3_16 = 0.5 * (x3x**2 + x3y**2 + x3z**2) + 0.5  # e5\nS1_1 = X1_1  # e1\nS1_2 = X1_2  # e2\nS1_4 = X1_4  # e3\nS1_8 = X1_8 - 0.5 * s1r**2  # e4\nS1_16 = X1_16 - 0.5 * s1r**2  # e5\nS2_1 = X2_1  # e1\nS2_2 = X2_2  # e2\nS2_4 = X2_4  # e3\nS2_8 = X2_8 - 0.5 * s2r**2  # e4\nS2_16 = X2_16 - 0.5 * s2r**2  # e5\nS3_1 = X3_1  # e1\nS3_2 = X3_2  # e2\nS3_4 = X3_4  # e3\nS3_8 = X3_8 - 0.5 * s3r**2  # e4\nS3_16 = X3_16 - 0.5 * s3r**2  # e5\npp1_7 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_4 - (S1_1 * S2_4 - S1_4 * S2_1) * S3_2 + (S1_2 * S2_4 - S1_4 * S2_2) * S3_1  # e123\npp1_11 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_8 - (S1_1 * S2_8 - S1_8 * S2_1) * S3_2 + (S1_2 * S2_8 - S1_8 * S2_2) * S3_1  # e124\npp1_13 = (S1_1 * S2_4 - S1_4 * S2_1) * S3_8 - (S1_1 * S2_8 - S1_8 * S2_1) * S3_4 + (S1_4 * S2_8 - S1_8 * S2_4) * S3_1  # e134\npp1_14 = (S1_2 * S2_4 - S1_4 * S2_2) * S3_8 - (S1_2 * S2_8 - S1_8 * S2_2) * S3_4 + (S1_4 * S2_8 - S1_8 * S2_4) * S3_2  # e234\npp1_19 = (S1_1 * S2_2 - S1_2 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_2 + (S1_2 * S2_16 - S1_16 * S2_2) * S3_1  # e125\npp1_21 = (S1_1 * S2_4 - S1_4 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_4 + (S1_4 * S2_16 - S1_16 * S2_4) * S3_1  # e135\npp1_22 = (S1_2 * S2_4 - S1_4 * S2_2) * S3_16 - (S1_2 * S2_16 - S1_16 * S2_2) * S3_4 + (S1_4 * S2_16 - S1_16 * S2_4) * S3_2  # e235\npp1_25 = (S1_1 * S2_8 - S1_8 * S2_1) * S3_16 - (S1_1 * S2_16 - S1_16 * S2_1) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_1  # e145\npp1_26 = (S1_2 * S2_8 - S1_8 * S2_2) * S3_16 - (S1_2 * S2_16 - S1_16 * S2_2) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_2  # e245\npp1_28 = (S1_4 * S2_8 - S1_8 * S2_4) * S3_16 - (S1_4 * S2_16 - S1_16 * S2_4) * S3_8 + (S1_8 * S2_16 - S1_16 * S2_8) * S3_4  # e345\nx4_1 = -(pp1_14 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_22 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_26 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_28 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e1\nx4_2 = pp1_13 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_25 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_28 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e2\nx4_4 = -(pp1_11 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_19 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_25 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_26 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e3\nx4_8 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_19 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_22 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e4\nx4_16 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_11 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_13 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_14 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e5\nx5_1 = -(pp1_14 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_22 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_26 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_28 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e1\nx5_2 = pp1_13 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_25 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_28 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e2\nx5_4 = -(pp1_11 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)) + pp1_19 * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_25 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_26 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e3\nx5_8 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_19 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_21 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_22 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e4\nx5_16 = pp1_7**2 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_11 * (-pp1_19 + pp1_11) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) - pp1_13 * (pp1_21 - pp1_13) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + pp1_14 * (-pp1_22 + pp1_14) / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2) + math.sqrt(pp1_7**2 + pp1_11**2 + pp1_13**2 + pp1_14**2 - pp1_19**2 - pp1_21**2 - pp1_22**2 - pp1_25**2 - pp1_26**2 - pp1_28**2) * pp1_7 / ((-pp1_19 + pp1_11)**2 + (pp1_21 - pp1_13)**2 + (-pp1_22 + pp1_14)**2)  # e5\n\n# --- visualization ---\nvisualization = [\n    ('S1', (0.0, 0.0, 1.0)),\n    ('S2', (1.0, 0.0, 0.0)),\n    ('S3', (0.0, 1.0, 0.0)),\n    ('x4', (1.0, 1.0, 0.0)),\n    ('x5', (1.0, 1.0, 0.0)),\n]\n",
  "scene": {
    "version": 1,
    "space": "cga3d",
    "objects": [
      {
        "id": "S1",
        "kind": "sphere",
        "color": {
          "r": 0.0,
          "g": 0.0,
          "b": 1.0
        },
        "label": "S1",
        "params": {
          "cx": 0.0,
          "cy": 0.0,
          "cz": 0.0,
          "r": 0.5
        }
      },
      {
        "id": "S2",
        "kind": "sphere",
        "color": {
          "r": 1.0,
          "g": 0.0,
          "b": 0.0
        },
        "label": "S2",
        "params": {
          "cx": 0.0,
          "cy": 0.4,
          "cz": 0.0,
          "r": 0.4
        }
      },
      {
        "id": "S3",
        "kind": "sphere",
        "color": {
          "r": 0.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "S3",
        "params": {
          "cx": 0.0,
          "cy": 0.45000000000000007,
          "cz": 0.20000000000000004,
          "r": 0.35
        }
      },
      {
        "id": "x4",
        "kind": "point",
        "color": {
          "r": 1.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "x4",
        "params": {
          "x": -0.32111560904913994,
          "y": 0.3125,
          "z": 0.22187499999999974
        }
      },
      {
        "id": "x5",
        "kind": "point",
        "color": {
          "r": 1.0,
          "g": 1.0,
          "b": 0.0
        },
        "label": "x5",
        "params": {
          "x": 0.32111560904913994,
          "y": 0.3125,
          "z": 0.22187499999999974
        }
      }
    ]
  },
  "inputs": {
    "x1x": 0.0,
    "x1y": 0.0,
    "x1z": 0.0,
    "x2x": 0.0,
    "x2y": 0.4,
    "x2z": 0.0,
    "x3x": 0.0,
    "x3y": 0.45,
    "x3z": 0.2,
    "s1r": 0.5,
    "s2r": 0.4,
    "s3r": 0.3
  },
  "outputs": {
    "S1": {
      "e4": -0.625,
      "e5": 0.375
    },
    "S2": {
      "e2": 0.4,
      "e4": -0.5,
      "e5": 0.5
    },
    "S3": {
      "e2": 0.45,
      "e3": 0.2,
      "e4": -0.43999999999999995,
      "e5": 0.5599999999999999
    },
    "x4": {
      "e1": -0.3211156090491399,
      "e2": 0.31249999999999994,
      "e3": 0.2218749999999997,
      "e4": -0.375,
      "e5": 0.6249999999999999
    },
    "x5": {
      "e1": 0.3211156090491399,
      "e2": 0.31249999999999994,
      "e3": 0.2218749999999997,
      "e4": -0.375,
      "e5": 0.6249999999999999
    }
  },
  "warnings": []
};

/** 422 body for s3r = 0.05: the spheres no longer intersect. */
export const brokenIntersection: { detail: ErrorDetail } = {
  "detail": {
    "message": "step x4_1: sqrt of negative value -0.0007680625000000001",
    "diagnostics": [
      {
        "severity": "error",
        "code": "sqrt_negative",
        "message": "step x4_1: sqrt of negative value -0.0007680625000000001"
      }
    ]
  }
};

/** 422 body for a request the planner cannot recognize. */
export const unplannableRequest: { detail: ErrorDetail } = {
  "detail": {
    "message": "cannot recognize an intent in: 'Bake a cake'",
    "diagnostics": [
      {
        "severity": "error",
        "code": "E401",
        "message": "cannot recognize an intent in: 'Bake a cake'"
      }
    ]
  }
};
