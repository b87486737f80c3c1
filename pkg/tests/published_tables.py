"""Published run tables, transcribed for formula checks.

Columns: V, F, T, E, P, barrier_faces, polys_with_barriers, poly_tetras,
max_tetras, avg_tetras, F_out, time.
"""

COLUMNS = ("V", "F", "T", "E", "P", "barrier_faces", "polys_with_barriers",
           "poly_tetras", "max_tetras", "avg_tetras", "F_out", "time_ms")

INCIRCLE = {
    "random": [
        (496, 5155, 2462, 3188, 748, 477, 182, 191, 15, 3.0, 3442, 0.1),
        (989, 10283, 4910, 6361, 1444, 885, 369, 344, 19, 3.0, 6817, 0.3),
        (4997, 59369, 29025, 35340, 8637, 5537, 2143, 2153, 21, 3.0, 38989, 1.7),
        (9988, 118495, 57917, 70565, 17032, 11019, 4265, 4164, 24, 3.0, 77617, 3.3),
        (49999, 642745, 318552, 374191, 95933, 62262, 24113, 24203, 32, 3.0, 420174, 18.9),
    ],
    "poisson": [
        (533, 5196, 2458, 3270, 828, 352, 202, 168, 11, 3.0, 3566, 0.1),
        (1002, 9714, 4589, 6126, 1505, 710, 381, 355, 13, 3.0, 6630, 0.3),
        (4995, 56200, 27331, 33863, 9198, 4308, 2393, 2280, 16, 3.0, 38069, 1.8),
        (10557, 119178, 58005, 71729, 19355, 9126, 4966, 4606, 16, 3.0, 80532, 3.5),
        (50149, 616412, 304756, 361804, 104452, 49083, 28055, 26313, 17, 3.0, 416146, 17.2),
    ],
    "quality": [
        (513, 4729, 2227, 3014, 748, 301, 178, 155, 12, 3.0, 3250, 0.1),
        (996, 9586, 4553, 6028, 1533, 641, 372, 360, 17, 3.0, 6568, 0.3),
        (5030, 53568, 25986, 32611, 8655, 3413, 2210, 1932, 15, 3.0, 36239, 1.5),
        (10134, 111654, 54515, 67272, 18088, 7147, 4556, 3971, 14, 3.0, 75231, 3.2),
        (50027, 578629, 285369, 343286, 94196, 37881, 24128, 20154, 18, 3.0, 387486, 16.3),
    ],
    "grid": [
        (512, 4410, 2058, 2863, 690, 33, 33, 7, 5, 3.0, 3042, 0.1),
        (1000, 9234, 4374, 5859, 1460, 53, 53, 14, 5, 3.0, 6320, 0.3),
        (4913, 50688, 24576, 31024, 8376, 1741, 1741, 471, 5, 3.0, 34476, 1.4),
        (10648, 113778, 55566, 68859, 18565, 721, 721, 224, 5, 3.0, 76771, 3.4),
        (50653, 567648, 279936, 338364, 93829, 8998, 8998, 2362, 5, 3.0, 381531, 15.7),
    ],
}

AREA = {
    "random": [
        (496, 5155, 2462, 3188, 738, 238, 146, 158, 16, 3.0, 3431, 0.0),
        (989, 10283, 4910, 6361, 1448, 455, 298, 265, 26, 3.0, 6821, 0.0),
        (4997, 59369, 29025, 35340, 8495, 2777, 1836, 1541, 18, 3.0, 38834, 0.2),
        (9988, 118495, 57917, 70565, 16747, 5428, 3576, 3008, 22, 3.0, 77325, 0.5),
        (49999, 642745, 318552, 374191, 92339, 30704, 20275, 15856, 26, 3.0, 416526, 2.8),
    ],
    "poisson": [
        (533, 5196, 2458, 3270, 794, 178, 134, 125, 12, 3.0, 3532, 0.0),
        (1002, 9714, 4589, 6126, 1394, 352, 248, 210, 14, 3.0, 6520, 0.0),
        (4995, 56200, 27331, 33863, 8453, 2246, 1654, 1386, 16, 3.0, 37322, 0.2),
        (10557, 119178, 58005, 71729, 18018, 4853, 3496, 2984, 23, 3.0, 79193, 0.5),
        (50149, 616412, 304756, 361804, 95469, 26172, 19457, 15573, 18, 3.0, 407135, 2.6),
    ],
    "quality": [
        (513, 4729, 2227, 3014, 711, 198, 137, 129, 12, 3.0, 3213, 0.0),
        (996, 9586, 4553, 6028, 1467, 372, 271, 270, 13, 3.0, 6501, 0.1),
        (5030, 53568, 25986, 32611, 8234, 2177, 1591, 1426, 19, 3.0, 35817, 0.2),
        (10134, 111654, 54515, 67272, 17216, 4671, 3426, 2957, 17, 3.0, 74360, 0.5),
        (50027, 578629, 285369, 343286, 89156, 24895, 18064, 14959, 19, 3.0, 382428, 3.7),
    ],
    "grid": [
        (512, 4410, 2058, 2863, 695, 311, 136, 190, 16, 3.0, 3048, 0.0),
        (1000, 9234, 4374, 5859, 1301, 1086, 256, 298, 15, 3.0, 6161, 0.0),
        (4913, 50688, 24576, 31024, 7127, 5386, 1615, 1464, 20, 3.0, 33248, 0.2),
        (10648, 113778, 55566, 68859, 15944, 13775, 3428, 3190, 24, 3.0, 74184, 0.8),
        (50653, 567648, 279936, 338364, 78934, 68376, 17538, 14850, 24, 4.0, 366755, 2.6),
    ],
}

# summary table: (reduction %, avg tetras, barriers %, retention %)
SUMMARY = {
    "incircle": {
        "random": (70.2, 3.0, 25.0, 24.8),
        "poisson": (66.4, 3.0, 25.6, 23.5),
        "quality": (66.6, 3.0, 24.9, 22.0),
        "grid": (66.4, 3.0, 8.5, 2.3),
    },
    "area": {
        "random": (70.7, 3.0, 21.1, 18.6),
        "poisson": (68.8, 3.0, 18.8, 16.0),
        "quality": (68.3, 3.0, 19.4, 17.6),
        "grid": (70.1, 3.2, 21.1, 21.9),
    },
}

# Voronoi comparison, quality meshes: (V, F, T, E) -> (cells, faces, vertices)
VORONOI = [
    ((513, 4729, 2227, 3014), (513, 3014, 2227)),
    ((996, 9586, 4553, 6028), (996, 6028, 4553)),
    ((5030, 53568, 25986, 32611), (5030, 32611, 25986)),
    ((10134, 111654, 54515, 67272), (10134, 67272, 54515)),
    ((50027, 578629, 285369, 343286), (50027, 343286, 285369)),
]


def records(table, family):
    return [dict(zip(COLUMNS, row)) for row in table[family]]
