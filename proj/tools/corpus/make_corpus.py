"""Regenerates the bundled feeder documents in data/."""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parents[2] / "data"


def write(name, root, edges, node_cost, line_cost, zero=(), notes=None, overrides=None):
    nodes = sorted({root} | {n for e in edges for n in e})
    overrides = overrides or {}
    doc = {"name": name}
    if notes:
        doc["notes"] = notes
    doc["root"] = root
    doc["nodes"] = [{"id": n, "zero_injection": n in zero, "node_cost": node_cost} for n in nodes]
    doc["edges"] = [{"from": a, "to": b, "line_cost": overrides.get((a, b), line_cost)} for a, b in edges]
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


NINE_BUS_EDGES = [(1, 2), (1, 3), (2, 4), (3, 5), (3, 6), (3, 7), (5, 8), (6, 9)]

IEEE37 = [(799, 701), (701, 702), (702, 705), (702, 713), (702, 703), (703, 727), (703, 730),
          (704, 714), (704, 720), (705, 742), (705, 712), (706, 725), (707, 724), (707, 722),
          (708, 733), (708, 732), (709, 731), (709, 708), (710, 735), (710, 736), (711, 741),
          (711, 740), (713, 704), (714, 718), (720, 707), (720, 706), (727, 744), (730, 709),
          (733, 734), (734, 737), (734, 710), (737, 738), (738, 711), (744, 728), (744, 729)]

IEEE123_LINES = """1-2,1-3,1-7,3-4,3-5,5-6,7-8,8-12,8-9,8-13,9-14,13-34,13-18,14-11,14-10,15-16,15-17,
18-19,18-21,19-20,21-22,21-23,23-24,23-25,25-26,25-28,26-27,26-31,27-33,28-29,29-30,30-250,31-32,
34-15,35-36,35-40,36-37,36-38,38-39,40-41,40-42,42-43,42-44,44-45,44-47,45-46,47-48,47-49,49-50,
50-51,51-151,52-53,53-54,54-55,54-57,55-56,57-58,57-60,58-59,60-61,60-62,62-63,63-64,64-65,65-66,
67-68,67-72,67-97,68-69,69-70,70-71,72-73,72-76,73-74,74-75,76-77,76-86,77-78,78-79,78-80,80-81,
81-82,81-84,82-83,84-85,86-87,87-88,87-89,89-90,89-91,91-92,91-93,93-94,93-95,95-96,97-98,
98-99,99-100,100-450,101-102,101-105,102-103,103-104,105-106,105-108,106-107,108-109,108-300,
109-110,110-111,110-112,112-113,113-114,135-35,149-1,152-52,160-67,197-101"""
IEEE123_CLOSED_SWITCHES = [(13, 152), (18, 135), (60, 160), (97, 197), (150, 149)]
IEEE123 = [tuple(map(int, s.split("-"))) for s in IEEE123_LINES.replace("\n", "").split(",")]
IEEE123 += IEEE123_CLOSED_SWITCHES

IEEE37_NO_LOAD = [702, 703, 704, 705, 706, 707, 708, 709, 710, 711]
IEEE123_NO_LOAD = [3, 8, 13, 14, 15, 18, 21, 23, 25, 26, 27, 36, 40, 44, 54, 57, 61, 67, 72, 78,
                   81, 89, 91, 93, 97, 101, 105, 108, 110]

write("nine_bus", 1, NINE_BUS_EDGES, 2, 1, overrides={(3, 6): 0.3, (3, 7): 0.3},
      notes="Nine-node example feeder; lines (3,6) and (3,7) are cheap.")
write("ieee37", 799, IEEE37, 2, 1,
      notes=("Single-phase radial rendering of the 37-bus test feeder. Root is the substation bus 799; "
             "the regulator 799-701 is kept as a plain line; the in-line transformer to bus 775 and "
             "that bus are dropped. Costs a = 2, b = 1. No zero-injection flags here; the buses "
             "without spot load are listed in no_load_buses."))
write("ieee123", 150, IEEE123, 2, 1,
      notes=("Single-phase radial rendering of the 123-bus test feeder. Root is the substation bus "
             "150; regulators and closed switches are plain lines; normally-open switches are "
             "removed; the transformer to bus 610 is dropped. Costs a = 2, b = 1. Buses without "
             "spot load are listed in no_load_buses."))

for name, buses in (("ieee37", IEEE37_NO_LOAD), ("ieee123", IEEE123_NO_LOAD)):
    path = OUT / f"{name}.json"
    doc = json.loads(path.read_text())
    doc["no_load_buses"] = buses
    path.write_text(json.dumps(doc, indent=2) + "\n")
