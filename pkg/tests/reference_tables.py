"""Reference radii kept as text, so the number of digits shown for every
entry is available to the comparisons."""

# Square, first region: side 1, rows n = 1..100.
SQUARE_A = (
    "0.2500", "0.1277", "0.0732", "0.0465", "0.0319", "0.0232",
    "0.0176", "0.0137", "0.0110", "0.0091", "0.0076", "0.0064",
    "0.0055", "0.0048", "0.0042", "0.0037", "0.0033", "0.0029",
    "0.0026", "0.0024", "0.0022", "0.0020", "0.0018", "0.0017",
    "0.0015", "0.0014", "0.0013", "0.0012", "0.0012", "0.0011",
    "0.0010", "9.4996e-04", "8.9405e-04", "8.4293e-04", "7.9607e-04", "7.5301e-04",
    "7.1336e-04", "6.7675e-04", "6.4289e-04", "6.1151e-04", "5.8236e-04", "5.5526e-04",
    "5.3000e-04", "5.0643e-04", "4.8439e-04", "4.6376e-04", "4.4442e-04", "4.2627e-04",
    "4.0920e-04", "3.9314e-04", "3.7801e-04", "3.6374e-04", "3.5025e-04", "3.3751e-04",
    "3.2544e-04", "3.1401e-04", "3.0318e-04", "2.9289e-04", "2.8312e-04", "2.7383e-04",
    "2.6499e-04", "2.5657e-04", "2.4855e-04", "2.4089e-04", "2.3359e-04", "2.2661e-04",
    "2.1994e-04", "2.1356e-04", "2.0745e-04", "2.0161e-04", "1.9600e-04", "1.9063e-04",
    "1.8547e-04", "1.8052e-04", "1.7577e-04", "1.7120e-04", "1.6681e-04", "1.6258e-04",
    "1.5851e-04", "1.5460e-04", "1.5082e-04", "1.4719e-04", "1.4368e-04", "1.4030e-04",
    "1.3703e-04", "1.3388e-04", "1.3083e-04", "1.2789e-04", "1.2505e-04", "1.2230e-04",
    "1.1964e-04", "1.1706e-04", "1.1457e-04", "1.1216e-04", "1.0982e-04", "1.0755e-04",
    "1.0536e-04", "1.0323e-04", "1.0116e-04", "9.9157e-05",
)

# Square, second region: side 1, rows n = 1..100.
SQUARE_B = (
    "0.1212", "0.0702", "0.0449", "0.0310", "0.0226", "0.0172",
    "0.0135", "0.0108", "0.0089", "0.0074", "0.0063", "0.0054",
    "0.0047", "0.0041", "0.0036", "0.0032", "0.0029", "0.0026",
    "0.0024", "0.0022", "0.0020", "0.0018", "0.0017", "0.0015",
    "0.0014", "0.0013", "0.0012", "0.0011", "0.0011", "0.0010",
    "9.4496e-04", "8.8948e-04", "8.3875e-04", "7.9224e-04", "7.4948e-04", "7.1010e-04",
    "6.7374e-04", "6.4010e-04", "6.0892e-04", "5.7996e-04", "5.5302e-04", "5.2791e-04",
    "5.0448e-04", "4.8257e-04", "4.6205e-04", "4.4282e-04", "4.2476e-04", "4.0779e-04",
    "3.9181e-04", "3.7675e-04", "3.6255e-04", "3.4913e-04", "3.3645e-04", "3.2444e-04",
    "3.1306e-04", "3.0227e-04", "2.9203e-04", "2.8231e-04", "2.7306e-04", "2.6425e-04",
    "2.5587e-04", "2.4788e-04", "2.4025e-04", "2.3298e-04", "2.2603e-04", "2.1938e-04",
    "2.1303e-04", "2.0694e-04", "2.0112e-04", "1.9553e-04", "1.9018e-04", "1.8504e-04",
    "1.8011e-04", "1.7537e-04", "1.7082e-04", "1.6644e-04", "1.6223e-04", "1.5817e-04",
    "1.5427e-04", "1.5051e-04", "1.4688e-04", "1.4338e-04", "1.4001e-04", "1.3676e-04",
    "1.3361e-04", "1.3058e-04", "1.2764e-04", "1.2481e-04", "1.2207e-04", "1.1941e-04",
    "1.1685e-04", "1.1436e-04", "1.1195e-04", "1.0962e-04", "1.0736e-04", "1.0517e-04",
    "1.0305e-04", "1.0099e-04", "9.8988e-05", "9.7047e-05",
)

# Sector of unit radius: central angle in degrees -> rows i = 1..15 of
# (radius, subtended angle in degrees).
SECTOR = {
    30: (
        ("0.2056", "30.0000"),
        ("0.0432", "5.1759"),
        ("0.0077", "0.8882"),
        ("0.0013", "0.1524"),
        ("0.0002", "0.0261"),
        ("39.08e-6", "0.0045"),
        ("67e-7", "76.97e-5"),
        ("12e-7", "13.21e-5"),
        ("20e-8", "22.66e-6"),
        ("34e-9", "38.87e-7"),
        ("58e-10", "66.7e-8"),
        ("10e-10", "11.44e-8"),
        ("17e-11", "19.63e-9"),
        ("29e-12", "33.69e-10"),
        ("50e-13", "57.80e-11"),
    ),
    45: (
        ("0.2768", "45.0000"),
        ("0.0638", "7.8185"),
        ("0.0116", "1.3420"),
        ("0.0020", "0.2302"),
        ("0.0003", "0.0395"),
        ("59.14e-6", "0.0068"),
        ("10.18e-6", "0.0012"),
        ("17e-7", "19.95e-5"),
        ("30e-8", "34.23e-6"),
        ("51e-9", "58.73e-7"),
        ("9e-9", "10.08e-7"),
        ("15e-10", "17.29e-8"),
        ("26e-11", "29.66e-9"),
        ("44e-12", "50.9e-10"),
        ("76e-13", "87.32e-11"),
    ),
    60: (
        ("0.3333", "60.0000"),
        ("0.0840", "10.5288"),
        ("0.0155", "1.8077"),
        ("0.0027", "0.3102"),
        ("0.0005", "0.0532"),
        ("79.65e-6", "0.0091"),
        ("13.62e-6", "0.0016"),
        ("23e-7", "26.88e-5"),
        ("40e-8", "46.11e-6"),
        ("69e-9", "79.12e-7"),
        ("12e-9", "13.57e-7"),
        ("20e-10", "23.29e-8"),
        ("35e-11", "39.96e-9"),
        ("60e-12", "68.56e-10"),
        ("10e-12", "11.76e-10"),
    ),
    90: (
        ("0.4142", "90.0000"),
        ("0.1239", "16.2602"),
        ("0.0238", "2.7944"),
        ("0.0042", "0.4795"),
        ("0.0007", "0.0823"),
        ("12.32e-5", "0.0141"),
        ("21.11e-6", "0.0024"),
        ("36e-7", "41.55e-5"),
        ("62e-8", "71.28e-6"),
        ("11e-8", "12.23e-6"),
        ("18e-9", "20.98e-7"),
        ("31e-10", "36e-8"),
        ("54e-11", "61.77e-9"),
        ("9e-11", "10.6e-9"),
        ("16e-12", "18.18e-10"),
    ),
    120: (
        ("0.4641", "120.0000"),
        ("0.1640", "22.6285"),
        ("0.0329", "3.8947"),
        ("0.0058", "0.6683"),
        ("0.0010", "0.1147"),
        ("17.17e-5", "0.0197"),
        ("29.49e-6", "0.0034"),
        ("51e-7", "57.91e-5"),
        ("87e-8", "99.36e-6"),
        ("15e-8", "17.05e-6"),
        ("26e-9", "29.25e-7"),
        ("44e-10", "50.18e-8"),
        ("75e-11", "86.1e-9"),
        ("13e-11", "14.77e-9"),
        ("22e-12", "25.35e-10"),
    ),
    135: (
        ("0.4802", "135.0000"),
        ("0.1845", "26.1597"),
        ("0.0378", "4.5073"),
        ("0.0067", "0.7734"),
        ("0.0012", "0.1327"),
        ("19.86e-5", "0.0228"),
        ("34.14e-6", "0.0039"),
        ("58e-7", "67.02e-5"),
        ("10e-7", "11.5e-5"),
        ("17e-8", "19.73e-6"),
        ("30e-9", "33.85e-7"),
        ("51e-10", "58.08e-8"),
        ("87e-11", "99.65e-9"),
        ("15e-11", "17.1e-9"),
        ("26e-12", "29.33e-10"),
    ),
    150: (
        ("0.4913", "150.0000"),
        ("0.2056", "30.0000"),
        ("0.0432", "5.1759"),
        ("0.0077", "0.8882"),
        ("0.0013", "0.1524"),
        ("22.81e-5", "0.0261"),
        ("39.08e-6", "0.0045"),
        ("67e-7", "76.97e-5"),
        ("12e-7", "13.21e-5"),
        ("20e-8", "22.66e-6"),
        ("34e-9", "38.87e-7"),
        ("58e-10", "66.7e-8"),
        ("10e-10", "11.44e-8"),
        ("17e-11", "19.63e-9"),
        ("29e-12", "33.69e-10"),
    ),
}
