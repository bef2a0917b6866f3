// Generated by scripts/gen_unicode_tables.py (Unicode 13.0.0). Do not edit.
#include "stegocanary/unicode_tables.hpp"

namespace stegocanary::uni {

// NFKC singleton expansions: cp -> UTF-8 replacement in kNfkcPool.
const NfkcEntry kNfkcMap[] = {
    {0xA0,0,1},{0xA8,1,3},{0xAA,4,1},{0xAF,5,3},{0xB2,8,1},{0xB3,9,1},
    {0xB4,10,3},{0xB5,13,2},{0xB8,15,3},{0xB9,18,1},{0xBA,19,1},{0xBC,20,5},
    {0xBD,25,5},{0xBE,30,5},{0x132,35,2},{0x133,37,2},{0x13F,39,3},{0x140,42,3},
    {0x149,45,3},{0x17F,48,1},{0x1C4,49,3},{0x1C5,52,3},{0x1C6,55,3},{0x1C7,58,2},
    {0x1C8,60,2},{0x1C9,62,2},{0x1CA,64,2},{0x1CB,66,2},{0x1CC,68,2},{0x1F1,70,2},
    {0x1F2,72,2},{0x1F3,74,2},{0x2B0,76,1},{0x2B1,77,2},{0x2B2,79,1},{0x2B3,80,1},
    {0x2B4,81,2},{0x2B5,83,2},{0x2B6,85,2},{0x2B7,87,1},{0x2B8,88,1},{0x2D8,89,3},
    {0x2D9,92,3},{0x2DA,95,3},{0x2DB,98,3},{0x2DC,101,3},{0x2DD,104,3},{0x2E0,107,2},
    {0x2E1,109,1},{0x2E2,110,1},{0x2E3,111,1},{0x2E4,112,2},{0x340,114,2},{0x341,116,2},
    {0x343,118,2},{0x344,120,4},{0x374,124,2},{0x37A,126,3},{0x37E,129,1},{0x384,130,3},
    {0x385,133,5},{0x387,138,2},{0x3D0,140,2},{0x3D1,142,2},{0x3D2,144,2},{0x3D3,146,2},
    {0x3D4,148,2},{0x3D5,150,2},{0x3D6,152,2},{0x3F0,154,2},{0x3F1,156,2},{0x3F2,158,2},
    {0x3F4,160,2},{0x3F5,162,2},{0x3F9,164,2},{0x587,166,4},{0x675,170,4},{0x676,174,4},
    {0x677,178,4},{0x678,182,4},{0x958,186,6},{0x959,192,6},{0x95A,198,6},{0x95B,204,6},
    {0x95C,210,6},{0x95D,216,6},{0x95E,222,6},{0x95F,228,6},{0x9DC,234,6},{0x9DD,240,6},
    {0x9DF,246,6},{0xA33,252,6},{0xA36,258,6},{0xA59,264,6},{0xA5A,270,6},{0xA5B,276,6},
    {0xA5E,282,6},{0xB5C,288,6},{0xB5D,294,6},{0xE33,300,6},{0xEB3,306,6},{0xEDC,312,6},
    {0xEDD,318,6},{0xF0C,324,3},{0xF43,327,6},{0xF4D,333,6},{0xF52,339,6},{0xF57,345,6},
    {0xF5C,351,6},{0xF69,357,6},{0xF73,363,6},{0xF75,369,6},{0xF76,375,6},{0xF77,381,9},
    {0xF78,390,6},{0xF79,396,9},{0xF81,405,6},{0xF93,411,6},{0xF9D,417,6},{0xFA2,423,6},
    {0xFA7,429,6},{0xFAC,435,6},{0xFB9,441,6},{0x10FC,447,3},{0x1D2C,450,1},{0x1D2D,451,2},
    {0x1D2E,453,1},{0x1D30,454,1},{0x1D31,455,1},{0x1D32,456,2},{0x1D33,458,1},{0x1D34,459,1},
    {0x1D35,460,1},{0x1D36,461,1},{0x1D37,462,1},{0x1D38,463,1},{0x1D39,464,1},{0x1D3A,465,1},
    {0x1D3C,466,1},{0x1D3D,467,2},{0x1D3E,469,1},{0x1D3F,470,1},{0x1D40,471,1},{0x1D41,472,1},
    {0x1D42,473,1},{0x1D43,474,1},{0x1D44,475,2},{0x1D45,477,2},{0x1D46,479,3},{0x1D47,482,1},
    {0x1D48,483,1},{0x1D49,484,1},{0x1D4A,485,2},{0x1D4B,487,2},{0x1D4C,489,2},{0x1D4D,491,1},
    {0x1D4F,492,1},{0x1D50,493,1},{0x1D51,494,2},{0x1D52,496,1},{0x1D53,497,2},{0x1D54,499,3},
    {0x1D55,502,3},{0x1D56,505,1},{0x1D57,506,1},{0x1D58,507,1},{0x1D59,508,3},{0x1D5A,511,2},
    {0x1D5B,513,1},{0x1D5C,514,3},{0x1D5D,517,2},{0x1D5E,519,2},{0x1D5F,521,2},{0x1D60,523,2},
    {0x1D61,525,2},{0x1D62,527,1},{0x1D63,528,1},{0x1D64,529,1},{0x1D65,530,1},{0x1D66,531,2},
    {0x1D67,533,2},{0x1D68,535,2},{0x1D69,537,2},{0x1D6A,539,2},{0x1D78,541,2},{0x1D9B,543,2},
    {0x1D9C,545,1},{0x1D9D,546,2},{0x1D9E,548,2},{0x1D9F,550,2},{0x1DA0,552,1},{0x1DA1,553,2},
    {0x1DA2,555,2},{0x1DA3,557,2},{0x1DA4,559,2},{0x1DA5,561,2},{0x1DA6,563,2},{0x1DA7,565,3},
    {0x1DA8,568,2},{0x1DA9,570,2},{0x1DAA,572,3},{0x1DAB,575,2},{0x1DAC,577,2},{0x1DAD,579,2},
    {0x1DAE,581,2},{0x1DAF,583,2},{0x1DB0,585,2},{0x1DB1,587,2},{0x1DB2,589,2},{0x1DB3,591,2},
    {0x1DB4,593,2},{0x1DB5,595,2},{0x1DB6,597,2},{0x1DB7,599,2},{0x1DB8,601,3},{0x1DB9,604,2},
    {0x1DBA,606,2},{0x1DBB,608,1},{0x1DBC,609,2},{0x1DBD,611,2},{0x1DBE,613,2},{0x1DBF,615,2},
    {0x1E9A,617,3},{0x1E9B,620,3},{0x1F71,623,2},{0x1F73,625,2},{0x1F75,627,2},{0x1F77,629,2},
    {0x1F79,631,2},{0x1F7B,633,2},{0x1F7D,635,2},{0x1FBB,637,2},{0x1FBD,639,3},{0x1FBE,642,2},
    {0x1FBF,644,3},{0x1FC0,647,3},{0x1FC1,650,5},{0x1FC9,655,2},{0x1FCB,657,2},{0x1FCD,659,5},
    {0x1FCE,664,5},{0x1FCF,669,5},{0x1FD3,674,2},{0x1FDB,676,2},{0x1FDD,678,5},{0x1FDE,683,5},
    {0x1FDF,688,5},{0x1FE3,693,2},{0x1FEB,695,2},{0x1FED,697,5},{0x1FEE,702,5},{0x1FEF,707,1},
    {0x1FF9,708,2},{0x1FFB,710,2},{0x1FFD,712,3},{0x1FFE,715,3},{0x2000,718,1},{0x2001,719,1},
    {0x2002,720,1},{0x2003,721,1},{0x2004,722,1},{0x2005,723,1},{0x2006,724,1},{0x2007,725,1},
    {0x2008,726,1},{0x2009,727,1},{0x200A,728,1},{0x2011,729,3},{0x2017,732,3},{0x2024,735,1},
    {0x2025,736,2},{0x2026,738,3},{0x202F,741,1},{0x2033,742,6},{0x2034,748,9},{0x2036,757,6},
    {0x2037,763,9},{0x203C,772,2},{0x203E,774,3},{0x2047,777,2},{0x2048,779,2},{0x2049,781,2},
    {0x2057,783,12},{0x205F,795,1},{0x2070,796,1},{0x2071,797,1},{0x2074,798,1},{0x2075,799,1},
    {0x2076,800,1},{0x2077,801,1},{0x2078,802,1},{0x2079,803,1},{0x207A,804,1},{0x207B,805,3},
    {0x207C,808,1},{0x207D,809,1},{0x207E,810,1},{0x207F,811,1},{0x2080,812,1},{0x2081,813,1},
    {0x2082,814,1},{0x2083,815,1},{0x2084,816,1},{0x2085,817,1},{0x2086,818,1},{0x2087,819,1},
    {0x2088,820,1},{0x2089,821,1},{0x208A,822,1},{0x208B,823,3},{0x208C,826,1},{0x208D,827,1},
    {0x208E,828,1},{0x2090,829,1},{0x2091,830,1},{0x2092,831,1},{0x2093,832,1},{0x2094,833,2},
    {0x2095,835,1},{0x2096,836,1},{0x2097,837,1},{0x2098,838,1},{0x2099,839,1},{0x209A,840,1},
    {0x209B,841,1},{0x209C,842,1},{0x20A8,843,2},{0x2100,845,3},{0x2101,848,3},{0x2102,851,1},
    {0x2103,852,3},{0x2105,855,3},{0x2106,858,3},{0x2107,861,2},{0x2109,863,3},{0x210A,866,1},
    {0x210B,867,1},{0x210C,868,1},{0x210D,869,1},{0x210E,870,1},{0x210F,871,2},{0x2110,873,1},
    {0x2111,874,1},{0x2112,875,1},{0x2113,876,1},{0x2115,877,1},{0x2116,878,2},{0x2119,880,1},
    {0x211A,881,1},{0x211B,882,1},{0x211C,883,1},{0x211D,884,1},{0x2120,885,2},{0x2121,887,3},
    {0x2122,890,2},{0x2124,892,1},{0x2126,893,2},{0x2128,895,1},{0x212A,896,1},{0x212B,897,2},
    {0x212C,899,1},{0x212D,900,1},{0x212F,901,1},{0x2130,902,1},{0x2131,903,1},{0x2133,904,1},
    {0x2134,905,1},{0x2135,906,2},{0x2136,908,2},{0x2137,910,2},{0x2138,912,2},{0x2139,914,1},
    {0x213B,915,3},{0x213C,918,2},{0x213D,920,2},{0x213E,922,2},{0x213F,924,2},{0x2140,926,3},
    {0x2145,929,1},{0x2146,930,1},{0x2147,931,1},{0x2148,932,1},{0x2149,933,1},{0x2150,934,5},
    {0x2151,939,5},{0x2152,944,6},{0x2153,950,5},{0x2154,955,5},{0x2155,960,5},{0x2156,965,5},
    {0x2157,970,5},{0x2158,975,5},{0x2159,980,5},{0x215A,985,5},{0x215B,990,5},{0x215C,995,5},
    {0x215D,1000,5},{0x215E,1005,5},{0x215F,1010,4},{0x2160,1014,1},{0x2161,1015,2},{0x2162,1017,3},
    {0x2163,1020,2},{0x2164,1022,1},{0x2165,1023,2},{0x2166,1025,3},{0x2167,1028,4},{0x2168,1032,2},
    {0x2169,1034,1},{0x216A,1035,2},{0x216B,1037,3},{0x216C,1040,1},{0x216D,1041,1},{0x216E,1042,1},
    {0x216F,1043,1},{0x2170,1044,1},{0x2171,1045,2},{0x2172,1047,3},{0x2173,1050,2},{0x2174,1052,1},
    {0x2175,1053,2},{0x2176,1055,3},{0x2177,1058,4},{0x2178,1062,2},{0x2179,1064,1},{0x217A,1065,2},
    {0x217B,1067,3},{0x217C,1070,1},{0x217D,1071,1},{0x217E,1072,1},{0x217F,1073,1},{0x2189,1074,5},
    {0x222C,1079,6},{0x222D,1085,9},{0x222F,1094,6},{0x2230,1100,9},{0x2329,1109,3},{0x232A,1112,3},
    {0x2460,1115,1},{0x2461,1116,1},{0x2462,1117,1},{0x2463,1118,1},{0x2464,1119,1},{0x2465,1120,1},
    {0x2466,1121,1},{0x2467,1122,1},{0x2468,1123,1},{0x2469,1124,2},{0x246A,1126,2},{0x246B,1128,2},
    {0x246C,1130,2},{0x246D,1132,2},{0x246E,1134,2},{0x246F,1136,2},{0x2470,1138,2},{0x2471,1140,2},
    {0x2472,1142,2},{0x2473,1144,2},{0x2474,1146,3},{0x2475,1149,3},{0x2476,1152,3},{0x2477,1155,3},
    {0x2478,1158,3},{0x2479,1161,3},{0x247A,1164,3},{0x247B,1167,3},{0x247C,1170,3},{0x247D,1173,4},
    {0x247E,1177,4},{0x247F,1181,4},{0x2480,1185,4},{0x2481,1189,4},{0x2482,1193,4},{0x2483,1197,4},
    {0x2484,1201,4},{0x2485,1205,4},{0x2486,1209,4},{0x2487,1213,4},{0x2488,1217,2},{0x2489,1219,2},
    {0x248A,1221,2},{0x248B,1223,2},{0x248C,1225,2},{0x248D,1227,2},{0x248E,1229,2},{0x248F,1231,2},
    {0x2490,1233,2},{0x2491,1235,3},{0x2492,1238,3},{0x2493,1241,3},{0x2494,1244,3},{0x2495,1247,3},
    {0x2496,1250,3},{0x2497,1253,3},{0x2498,1256,3},{0x2499,1259,3},{0x249A,1262,3},{0x249B,1265,3},
    {0x249C,1268,3},{0x249D,1271,3},{0x249E,1274,3},{0x249F,1277,3},{0x24A0,1280,3},{0x24A1,1283,3},
    {0x24A2,1286,3},{0x24A3,1289,3},{0x24A4,1292,3},{0x24A5,1295,3},{0x24A6,1298,3},{0x24A7,1301,3},
    {0x24A8,1304,3},{0x24A9,1307,3},{0x24AA,1310,3},{0x24AB,1313,3},{0x24AC,1316,3},{0x24AD,1319,3},
    {0x24AE,1322,3},{0x24AF,1325,3},{0x24B0,1328,3},{0x24B1,1331,3},{0x24B2,1334,3},{0x24B3,1337,3},
    {0x24B4,1340,3},{0x24B5,1343,3},{0x24B6,1346,1},{0x24B7,1347,1},{0x24B8,1348,1},{0x24B9,1349,1},
    {0x24BA,1350,1},{0x24BB,1351,1},{0x24BC,1352,1},{0x24BD,1353,1},{0x24BE,1354,1},{0x24BF,1355,1},
    {0x24C0,1356,1},{0x24C1,1357,1},{0x24C2,1358,1},{0x24C3,1359,1},{0x24C4,1360,1},{0x24C5,1361,1},
    {0x24C6,1362,1},{0x24C7,1363,1},{0x24C8,1364,1},{0x24C9,1365,1},{0x24CA,1366,1},{0x24CB,1367,1},
    {0x24CC,1368,1},{0x24CD,1369,1},{0x24CE,1370,1},{0x24CF,1371,1},{0x24D0,1372,1},{0x24D1,1373,1},
    {0x24D2,1374,1},{0x24D3,1375,1},{0x24D4,1376,1},{0x24D5,1377,1},{0x24D6,1378,1},{0x24D7,1379,1},
    {0x24D8,1380,1},{0x24D9,1381,1},{0x24DA,1382,1},{0x24DB,1383,1},{0x24DC,1384,1},{0x24DD,1385,1},
    {0x24DE,1386,1},{0x24DF,1387,1},{0x24E0,1388,1},{0x24E1,1389,1},{0x24E2,1390,1},{0x24E3,1391,1},
    {0x24E4,1392,1},{0x24E5,1393,1},{0x24E6,1394,1},{0x24E7,1395,1},{0x24E8,1396,1},{0x24E9,1397,1},
    {0x24EA,1398,1},{0x2A0C,1399,12},{0x2A74,1411,3},{0x2A75,1414,2},{0x2A76,1416,3},{0x2ADC,1419,5},
    {0x2C7C,1424,1},{0x2C7D,1425,1},{0x2D6F,1426,3},{0x2E9F,1429,3},{0x2EF3,1432,3},{0x2F00,1435,3},
    {0x2F01,1438,3},{0x2F02,1441,3},{0x2F03,1444,3},{0x2F04,1447,3},{0x2F05,1450,3},{0x2F06,1453,3},
    {0x2F07,1456,3},{0x2F08,1459,3},{0x2F09,1462,3},{0x2F0A,1465,3},{0x2F0B,1468,3},{0x2F0C,1471,3},
    {0x2F0D,1474,3},{0x2F0E,1477,3},{0x2F0F,1480,3},{0x2F10,1483,3},{0x2F11,1486,3},{0x2F12,1489,3},
    {0x2F13,1492,3},{0x2F14,1495,3},{0x2F15,1498,3},{0x2F16,1501,3},{0x2F17,1504,3},{0x2F18,1507,3},
    {0x2F19,1510,3},{0x2F1A,1513,3},{0x2F1B,1516,3},{0x2F1C,1519,3},{0x2F1D,1522,3},{0x2F1E,1525,3},
    {0x2F1F,1528,3},{0x2F20,1531,3},{0x2F21,1534,3},{0x2F22,1537,3},{0x2F23,1540,3},{0x2F24,1543,3},
    {0x2F25,1546,3},{0x2F26,1549,3},{0x2F27,1552,3},{0x2F28,1555,3},{0x2F29,1558,3},{0x2F2A,1561,3},
    {0x2F2B,1564,3},{0x2F2C,1567,3},{0x2F2D,1570,3},{0x2F2E,1573,3},{0x2F2F,1576,3},{0x2F30,1579,3},
    {0x2F31,1582,3},{0x2F32,1585,3},{0x2F33,1588,3},{0x2F34,1591,3},{0x2F35,1594,3},{0x2F36,1597,3},
    {0x2F37,1600,3},{0x2F38,1603,3},{0x2F39,1606,3},{0x2F3A,1609,3},{0x2F3B,1612,3},{0x2F3C,1615,3},
    {0x2F3D,1618,3},{0x2F3E,1621,3},{0x2F3F,1624,3},{0x2F40,1627,3},{0x2F41,1630,3},{0x2F42,1633,3},
    {0x2F43,1636,3},{0x2F44,1639,3},{0x2F45,1642,3},{0x2F46,1645,3},{0x2F47,1648,3},{0x2F48,1651,3},
    {0x2F49,1654,3},{0x2F4A,1657,3},{0x2F4B,1660,3},{0x2F4C,1663,3},{0x2F4D,1666,3},{0x2F4E,1669,3},
    {0x2F4F,1672,3},{0x2F50,1675,3},{0x2F51,1678,3},{0x2F52,1681,3},{0x2F53,1684,3},{0x2F54,1687,3},
    {0x2F55,1690,3},{0x2F56,1693,3},{0x2F57,1696,3},{0x2F58,1699,3},{0x2F59,1702,3},{0x2F5A,1705,3},
    {0x2F5B,1708,3},{0x2F5C,1711,3},{0x2F5D,1714,3},{0x2F5E,1717,3},{0x2F5F,1720,3},{0x2F60,1723,3},
    {0x2F61,1726,3},{0x2F62,1729,3},{0x2F63,1732,3},{0x2F64,1735,3},{0x2F65,1738,3},{0x2F66,1741,3},
    {0x2F67,1744,3},{0x2F68,1747,3},{0x2F69,1750,3},{0x2F6A,1753,3},{0x2F6B,1756,3},{0x2F6C,1759,3},
    {0x2F6D,1762,3},{0x2F6E,1765,3},{0x2F6F,1768,3},{0x2F70,1771,3},{0x2F71,1774,3},{0x2F72,1777,3},
    {0x2F73,1780,3},{0x2F74,1783,3},{0x2F75,1786,3},{0x2F76,1789,3},{0x2F77,1792,3},{0x2F78,1795,3},
    {0x2F79,1798,3},{0x2F7A,1801,3},{0x2F7B,1804,3},{0x2F7C,1807,3},{0x2F7D,1810,3},{0x2F7E,1813,3},
    {0x2F7F,1816,3},{0x2F80,1819,3},{0x2F81,1822,3},{0x2F82,1825,3},{0x2F83,1828,3},{0x2F84,1831,3},
    {0x2F85,1834,3},{0x2F86,1837,3},{0x2F87,1840,3},{0x2F88,1843,3},{0x2F89,1846,3},{0x2F8A,1849,3},
    {0x2F8B,1852,3},{0x2F8C,1855,3},{0x2F8D,1858,3},{0x2F8E,1861,3},{0x2F8F,1864,3},{0x2F90,1867,3},
    {0x2F91,1870,3},{0x2F92,1873,3},{0x2F93,1876,3},{0x2F94,1879,3},{0x2F95,1882,3},{0x2F96,1885,3},
    {0x2F97,1888,3},{0x2F98,1891,3},{0x2F99,1894,3},{0x2F9A,1897,3},{0x2F9B,1900,3},{0x2F9C,1903,3},
    {0x2F9D,1906,3},{0x2F9E,1909,3},{0x2F9F,1912,3},{0x2FA0,1915,3},{0x2FA1,1918,3},{0x2FA2,1921,3},
    {0x2FA3,1924,3},{0x2FA4,1927,3},{0x2FA5,1930,3},{0x2FA6,1933,3},{0x2FA7,1936,3},{0x2FA8,1939,3},
    {0x2FA9,1942,3},{0x2FAA,1945,3},{0x2FAB,1948,3},{0x2FAC,1951,3},{0x2FAD,1954,3},{0x2FAE,1957,3},
    {0x2FAF,1960,3},{0x2FB0,1963,3},{0x2FB1,1966,3},{0x2FB2,1969,3},{0x2FB3,1972,3},{0x2FB4,1975,3},
    {0x2FB5,1978,3},{0x2FB6,1981,3},{0x2FB7,1984,3},{0x2FB8,1987,3},{0x2FB9,1990,3},{0x2FBA,1993,3},
    {0x2FBB,1996,3},{0x2FBC,1999,3},{0x2FBD,2002,3},{0x2FBE,2005,3},{0x2FBF,2008,3},{0x2FC0,2011,3},
    {0x2FC1,2014,3},{0x2FC2,2017,3},{0x2FC3,2020,3},{0x2FC4,2023,3},{0x2FC5,2026,3},{0x2FC6,2029,3},
    {0x2FC7,2032,3},{0x2FC8,2035,3},{0x2FC9,2038,3},{0x2FCA,2041,3},{0x2FCB,2044,3},{0x2FCC,2047,3},
    {0x2FCD,2050,3},{0x2FCE,2053,3},{0x2FCF,2056,3},{0x2FD0,2059,3},{0x2FD1,2062,3},{0x2FD2,2065,3},
    {0x2FD3,2068,3},{0x2FD4,2071,3},{0x2FD5,2074,3},{0x3000,2077,1},{0x3036,2078,3},{0x3038,2081,3},
    {0x3039,2084,3},{0x303A,2087,3},{0x309B,2090,4},{0x309C,2094,4},{0x309F,2098,6},{0x30FF,2104,6},
    {0x3131,2110,3},{0x3132,2113,3},{0x3133,2116,3},{0x3134,2119,3},{0x3135,2122,3},{0x3136,2125,3},
    {0x3137,2128,3},{0x3138,2131,3},{0x3139,2134,3},{0x313A,2137,3},{0x313B,2140,3},{0x313C,2143,3},
    {0x313D,2146,3},{0x313E,2149,3},{0x313F,2152,3},{0x3140,2155,3},{0x3141,2158,3},{0x3142,2161,3},
    {0x3143,2164,3},{0x3144,2167,3},{0x3145,2170,3},{0x3146,2173,3},{0x3147,2176,3},{0x3148,2179,3},
    {0x3149,2182,3},{0x314A,2185,3},{0x314B,2188,3},{0x314C,2191,3},{0x314D,2194,3},{0x314E,2197,3},
    {0x314F,2200,3},{0x3150,2203,3},{0x3151,2206,3},{0x3152,2209,3},{0x3153,2212,3},{0x3154,2215,3},
    {0x3155,2218,3},{0x3156,2221,3},{0x3157,2224,3},{0x3158,2227,3},{0x3159,2230,3},{0x315A,2233,3},
    {0x315B,2236,3},{0x315C,2239,3},{0x315D,2242,3},{0x315E,2245,3},{0x315F,2248,3},{0x3160,2251,3},
    {0x3161,2254,3},{0x3162,2257,3},{0x3163,2260,3},{0x3164,2263,3},{0x3165,2266,3},{0x3166,2269,3},
    {0x3167,2272,3},{0x3168,2275,3},{0x3169,2278,3},{0x316A,2281,3},{0x316B,2284,3},{0x316C,2287,3},
    {0x316D,2290,3},{0x316E,2293,3},{0x316F,2296,3},{0x3170,2299,3},{0x3171,2302,3},{0x3172,2305,3},
    {0x3173,2308,3},{0x3174,2311,3},{0x3175,2314,3},{0x3176,2317,3},{0x3177,2320,3},{0x3178,2323,3},
    {0x3179,2326,3},{0x317A,2329,3},{0x317B,2332,3},{0x317C,2335,3},{0x317D,2338,3},{0x317E,2341,3},
    {0x317F,2344,3},{0x3180,2347,3},{0x3181,2350,3},{0x3182,2353,3},{0x3183,2356,3},{0x3184,2359,3},
    {0x3185,2362,3},{0x3186,2365,3},{0x3187,2368,3},{0x3188,2371,3},{0x3189,2374,3},{0x318A,2377,3},
    {0x318B,2380,3},{0x318C,2383,3},{0x318D,2386,3},{0x318E,2389,3},{0x3192,2392,3},{0x3193,2395,3},
    {0x3194,2398,3},{0x3195,2401,3},{0x3196,2404,3},{0x3197,2407,3},{0x3198,2410,3},{0x3199,2413,3},
    {0x319A,2416,3},{0x319B,2419,3},{0x319C,2422,3},{0x319D,2425,3},{0x319E,2428,3},{0x319F,2431,3},
    {0x3200,2434,5},{0x3201,2439,5},{0x3202,2444,5},{0x3203,2449,5},{0x3204,2454,5},{0x3205,2459,5},
    {0x3206,2464,5},{0x3207,2469,5},{0x3208,2474,5},{0x3209,2479,5},{0x320A,2484,5},{0x320B,2489,5},
    {0x320C,2494,5},{0x320D,2499,5},{0x320E,2504,5},{0x320F,2509,5},{0x3210,2514,5},{0x3211,2519,5},
    {0x3212,2524,5},{0x3213,2529,5},{0x3214,2534,5},{0x3215,2539,5},{0x3216,2544,5},{0x3217,2549,5},
    {0x3218,2554,5},{0x3219,2559,5},{0x321A,2564,5},{0x321B,2569,5},{0x321C,2574,5},{0x321D,2579,8},
    {0x321E,2587,8},{0x3220,2595,5},{0x3221,2600,5},{0x3222,2605,5},{0x3223,2610,5},{0x3224,2615,5},
    {0x3225,2620,5},{0x3226,2625,5},{0x3227,2630,5},{0x3228,2635,5},{0x3229,2640,5},{0x322A,2645,5},
    {0x322B,2650,5},{0x322C,2655,5},{0x322D,2660,5},{0x322E,2665,5},{0x322F,2670,5},{0x3230,2675,5},
    {0x3231,2680,5},{0x3232,2685,5},{0x3233,2690,5},{0x3234,2695,5},{0x3235,2700,5},{0x3236,2705,5},
    {0x3237,2710,5},{0x3238,2715,5},{0x3239,2720,5},{0x323A,2725,5},{0x323B,2730,5},{0x323C,2735,5},
    {0x323D,2740,5},{0x323E,2745,5},{0x323F,2750,5},{0x3240,2755,5},{0x3241,2760,5},{0x3242,2765,5},
    {0x3243,2770,5},{0x3244,2775,3},{0x3245,2778,3},{0x3246,2781,3},{0x3247,2784,3},{0x3250,2787,3},
    {0x3251,2790,2},{0x3252,2792,2},{0x3253,2794,2},{0x3254,2796,2},{0x3255,2798,2},{0x3256,2800,2},
    {0x3257,2802,2},{0x3258,2804,2},{0x3259,2806,2},{0x325A,2808,2},{0x325B,2810,2},{0x325C,2812,2},
    {0x325D,2814,2},{0x325E,2816,2},{0x325F,2818,2},{0x3260,2820,3},{0x3261,2823,3},{0x3262,2826,3},
    {0x3263,2829,3},{0x3264,2832,3},{0x3265,2835,3},{0x3266,2838,3},{0x3267,2841,3},{0x3268,2844,3},
    {0x3269,2847,3},{0x326A,2850,3},{0x326B,2853,3},{0x326C,2856,3},{0x326D,2859,3},{0x326E,2862,3},
    {0x326F,2865,3},{0x3270,2868,3},{0x3271,2871,3},{0x3272,2874,3},{0x3273,2877,3},{0x3274,2880,3},
    {0x3275,2883,3},{0x3276,2886,3},{0x3277,2889,3},{0x3278,2892,3},{0x3279,2895,3},{0x327A,2898,3},
    {0x327B,2901,3},{0x327C,2904,6},{0x327D,2910,6},{0x327E,2916,3},{0x3280,2919,3},{0x3281,2922,3},
    {0x3282,2925,3},{0x3283,2928,3},{0x3284,2931,3},{0x3285,2934,3},{0x3286,2937,3},{0x3287,2940,3},
    {0x3288,2943,3},{0x3289,2946,3},{0x328A,2949,3},{0x328B,2952,3},{0x328C,2955,3},{0x328D,2958,3},
    {0x328E,2961,3},{0x328F,2964,3},{0x3290,2967,3},{0x3291,2970,3},{0x3292,2973,3},{0x3293,2976,3},
    {0x3294,2979,3},{0x3295,2982,3},{0x3296,2985,3},{0x3297,2988,3},{0x3298,2991,3},{0x3299,2994,3},
    {0x329A,2997,3},{0x329B,3000,3},{0x329C,3003,3},{0x329D,3006,3},{0x329E,3009,3},{0x329F,3012,3},
    {0x32A0,3015,3},{0x32A1,3018,3},{0x32A2,3021,3},{0x32A3,3024,3},{0x32A4,3027,3},{0x32A5,3030,3},
    {0x32A6,3033,3},{0x32A7,3036,3},{0x32A8,3039,3},{0x32A9,3042,3},{0x32AA,3045,3},{0x32AB,3048,3},
    {0x32AC,3051,3},{0x32AD,3054,3},{0x32AE,3057,3},{0x32AF,3060,3},{0x32B0,3063,3},{0x32B1,3066,2},
    {0x32B2,3068,2},{0x32B3,3070,2},{0x32B4,3072,2},{0x32B5,3074,2},{0x32B6,3076,2},{0x32B7,3078,2},
    {0x32B8,3080,2},{0x32B9,3082,2},{0x32BA,3084,2},{0x32BB,3086,2},{0x32BC,3088,2},{0x32BD,3090,2},
    {0x32BE,3092,2},{0x32BF,3094,2},{0x32C0,3096,4},{0x32C1,3100,4},{0x32C2,3104,4},{0x32C3,3108,4},
    {0x32C4,3112,4},{0x32C5,3116,4},{0x32C6,3120,4},{0x32C7,3124,4},{0x32C8,3128,4},{0x32C9,3132,5},
    {0x32CA,3137,5},{0x32CB,3142,5},{0x32CC,3147,2},{0x32CD,3149,3},{0x32CE,3152,2},{0x32CF,3154,3},
    {0x32D0,3157,3},{0x32D1,3160,3},{0x32D2,3163,3},{0x32D3,3166,3},{0x32D4,3169,3},{0x32D5,3172,3},
    {0x32D6,3175,3},{0x32D7,3178,3},{0x32D8,3181,3},{0x32D9,3184,3},{0x32DA,3187,3},{0x32DB,3190,3},
    {0x32DC,3193,3},{0x32DD,3196,3},{0x32DE,3199,3},{0x32DF,3202,3},{0x32E0,3205,3},{0x32E1,3208,3},
    {0x32E2,3211,3},{0x32E3,3214,3},{0x32E4,3217,3},{0x32E5,3220,3},{0x32E6,3223,3},{0x32E7,3226,3},
    {0x32E8,3229,3},{0x32E9,3232,3},{0x32EA,3235,3},{0x32EB,3238,3},{0x32EC,3241,3},{0x32ED,3244,3},
    {0x32EE,3247,3},{0x32EF,3250,3},{0x32F0,3253,3},{0x32F1,3256,3},{0x32F2,3259,3},{0x32F3,3262,3},
    {0x32F4,3265,3},{0x32F5,3268,3},{0x32F6,3271,3},{0x32F7,3274,3},{0x32F8,3277,3},{0x32F9,3280,3},
    {0x32FA,3283,3},{0x32FB,3286,3},{0x32FC,3289,3},{0x32FD,3292,3},{0x32FE,3295,3},{0x32FF,3298,6},
    {0x3300,3304,12},{0x3301,3316,12},{0x3302,3328,12},{0x3303,3340,9},{0x3304,3349,12},{0x3305,3361,9},
    {0x3306,3370,9},{0x3307,3379,15},{0x3308,3394,12},{0x3309,3406,9},{0x330A,3415,9},{0x330B,3424,9},
    {0x330C,3433,12},{0x330D,3445,12},{0x330E,3457,9},{0x330F,3466,9},{0x3310,3475,6},{0x3311,3481,9},
    {0x3312,3490,12},{0x3313,3502,12},{0x3314,3514,6},{0x3315,3520,15},{0x3316,3535,18},{0x3317,3553,15},
    {0x3318,3568,9},{0x3319,3577,15},{0x331A,3592,15},{0x331B,3607,12},{0x331C,3619,9},{0x331D,3628,9},
    {0x331E,3637,9},{0x331F,3646,12},{0x3320,3658,15},{0x3321,3673,12},{0x3322,3685,9},{0x3323,3694,9},
    {0x3324,3703,9},{0x3325,3712,6},{0x3326,3718,6},{0x3327,3724,6},{0x3328,3730,6},{0x3329,3736,9},
    {0x332A,3745,9},{0x332B,3754,15},{0x332C,3769,9},{0x332D,3778,12},{0x332E,3790,15},{0x332F,3805,9},
    {0x3330,3814,6},{0x3331,3820,6},{0x3332,3826,15},{0x3333,3841,12},{0x3334,3853,15},{0x3335,3868,9},
    {0x3336,3877,15},{0x3337,3892,6},{0x3338,3898,9},{0x3339,3907,9},{0x333A,3916,9},{0x333B,3925,9},
    {0x333C,3934,9},{0x333D,3943,12},{0x333E,3955,9},{0x333F,3964,6},{0x3340,3970,9},{0x3341,3979,9},
    {0x3342,3988,9},{0x3343,3997,12},{0x3344,4009,9},{0x3345,4018,9},{0x3346,4027,9},{0x3347,4036,15},
    {0x3348,4051,12},{0x3349,4063,6},{0x334A,4069,15},{0x334B,4084,6},{0x334C,4090,12},{0x334D,4102,12},
    {0x334E,4114,9},{0x334F,4123,9},{0x3350,4132,9},{0x3351,4141,12},{0x3352,4153,6},{0x3353,4159,9},
    {0x3354,4168,12},{0x3355,4180,6},{0x3356,4186,15},{0x3357,4201,9},{0x3358,4210,4},{0x3359,4214,4},
    {0x335A,4218,4},{0x335B,4222,4},{0x335C,4226,4},{0x335D,4230,4},{0x335E,4234,4},{0x335F,4238,4},
    {0x3360,4242,4},{0x3361,4246,4},{0x3362,4250,5},{0x3363,4255,5},{0x3364,4260,5},{0x3365,4265,5},
    {0x3366,4270,5},{0x3367,4275,5},{0x3368,4280,5},{0x3369,4285,5},{0x336A,4290,5},{0x336B,4295,5},
    {0x336C,4300,5},{0x336D,4305,5},{0x336E,4310,5},{0x336F,4315,5},{0x3370,4320,5},{0x3371,4325,3},
    {0x3372,4328,2},{0x3373,4330,2},{0x3374,4332,3},{0x3375,4335,2},{0x3376,4337,2},{0x3377,4339,2},
    {0x3378,4341,3},{0x3379,4344,3},{0x337A,4347,2},{0x337B,4349,6},{0x337C,4355,6},{0x337D,4361,6},
    {0x337E,4367,6},{0x337F,4373,12},{0x3380,4385,2},{0x3381,4387,2},{0x3382,4389,3},{0x3383,4392,2},
    {0x3384,4394,2},{0x3385,4396,2},{0x3386,4398,2},{0x3387,4400,2},{0x3388,4402,3},{0x3389,4405,4},
    {0x338A,4409,2},{0x338B,4411,2},{0x338C,4413,3},{0x338D,4416,3},{0x338E,4419,2},{0x338F,4421,2},
    {0x3390,4423,2},{0x3391,4425,3},{0x3392,4428,3},{0x3393,4431,3},{0x3394,4434,3},{0x3395,4437,3},
    {0x3396,4440,2},{0x3397,4442,2},{0x3398,4444,2},{0x3399,4446,2},{0x339A,4448,2},{0x339B,4450,3},
    {0x339C,4453,2},{0x339D,4455,2},{0x339E,4457,2},{0x339F,4459,3},{0x33A0,4462,3},{0x33A1,4465,2},
    {0x33A2,4467,3},{0x33A3,4470,3},{0x33A4,4473,3},{0x33A5,4476,2},{0x33A6,4478,3},{0x33A7,4481,5},
    {0x33A8,4486,6},{0x33A9,4492,2},{0x33AA,4494,3},{0x33AB,4497,3},{0x33AC,4500,3},{0x33AD,4503,3},
    {0x33AE,4506,7},{0x33AF,4513,8},{0x33B0,4521,2},{0x33B1,4523,2},{0x33B2,4525,3},{0x33B3,4528,2},
    {0x33B4,4530,2},{0x33B5,4532,2},{0x33B6,4534,3},{0x33B7,4537,2},{0x33B8,4539,2},{0x33B9,4541,2},
    {0x33BA,4543,2},{0x33BB,4545,2},{0x33BC,4547,3},{0x33BD,4550,2},{0x33BE,4552,2},{0x33BF,4554,2},
    {0x33C0,4556,3},{0x33C1,4559,3},{0x33C2,4562,4},{0x33C3,4566,2},{0x33C4,4568,2},{0x33C5,4570,2},
    {0x33C6,4572,6},{0x33C7,4578,3},{0x33C8,4581,2},{0x33C9,4583,2},{0x33CA,4585,2},{0x33CB,4587,2},
    {0x33CC,4589,2},{0x33CD,4591,2},{0x33CE,4593,2},{0x33CF,4595,2},{0x33D0,4597,2},{0x33D1,4599,2},
    {0x33D2,4601,3},{0x33D3,4604,2},{0x33D4,4606,2},{0x33D5,4608,3},{0x33D6,4611,3},{0x33D7,4614,2},
    {0x33D8,4616,4},{0x33D9,4620,3},{0x33DA,4623,2},{0x33DB,4625,2},{0x33DC,4627,2},{0x33DD,4629,2},
    {0x33DE,4631,5},{0x33DF,4636,5},{0x33E0,4641,4},{0x33E1,4645,4},{0x33E2,4649,4},{0x33E3,4653,4},
    {0x33E4,4657,4},{0x33E5,4661,4},{0x33E6,4665,4},{0x33E7,4669,4},{0x33E8,4673,4},{0x33E9,4677,5},
    {0x33EA,4682,5},{0x33EB,4687,5},{0x33EC,4692,5},{0x33ED,4697,5},{0x33EE,4702,5},{0x33EF,4707,5},
    {0x33F0,4712,5},{0x33F1,4717,5},{0x33F2,4722,5},{0x33F3,4727,5},{0x33F4,4732,5},{0x33F5,4737,5},
    {0x33F6,4742,5},{0x33F7,4747,5},{0x33F8,4752,5},{0x33F9,4757,5},{0x33FA,4762,5},{0x33FB,4767,5},
    {0x33FC,4772,5},{0x33FD,4777,5},{0x33FE,4782,5},{0x33FF,4787,3},{0xA69C,4790,2},{0xA69D,4792,2},
    {0xA770,4794,3},{0xA7F8,4797,2},{0xA7F9,4799,2},{0xAB5C,4801,3},{0xAB5D,4804,3},{0xAB5E,4807,2},
    {0xAB5F,4809,3},{0xAB69,4812,2},{0xF900,4814,3},{0xF901,4817,3},{0xF902,4820,3},{0xF903,4823,3},
    {0xF904,4826,3},{0xF905,4829,3},{0xF906,4832,3},{0xF907,4835,3},{0xF908,4838,3},{0xF909,4841,3},
    {0xF90A,4844,3},{0xF90B,4847,3},{0xF90C,4850,3},{0xF90D,4853,3},{0xF90E,4856,3},{0xF90F,4859,3},
    {0xF910,4862,3},{0xF911,4865,3},{0xF912,4868,3},{0xF913,4871,3},{0xF914,4874,3},{0xF915,4877,3},
    {0xF916,4880,3},{0xF917,4883,3},{0xF918,4886,3},{0xF919,4889,3},{0xF91A,4892,3},{0xF91B,4895,3},
    {0xF91C,4898,3},{0xF91D,4901,3},{0xF91E,4904,3},{0xF91F,4907,3},{0xF920,4910,3},{0xF921,4913,3},
    {0xF922,4916,3},{0xF923,4919,3},{0xF924,4922,3},{0xF925,4925,3},{0xF926,4928,3},{0xF927,4931,3},
    {0xF928,4934,3},{0xF929,4937,3},{0xF92A,4940,3},{0xF92B,4943,3},{0xF92C,4946,3},{0xF92D,4949,3},
    {0xF92E,4952,3},{0xF92F,4955,3},{0xF930,4958,3},{0xF931,4961,3},{0xF932,4964,3},{0xF933,4967,3},
    {0xF934,4970,3},{0xF935,4973,3},{0xF936,4976,3},{0xF937,4979,3},{0xF938,4982,3},{0xF939,4985,3},
    {0xF93A,4988,3},{0xF93B,4991,3},{0xF93C,4994,3},{0xF93D,4997,3},{0xF93E,5000,3},{0xF93F,5003,3},
    {0xF940,5006,3},{0xF941,5009,3},{0xF942,5012,3},{0xF943,5015,3},{0xF944,5018,3},{0xF945,5021,3},
    {0xF946,5024,3},{0xF947,5027,3},{0xF948,5030,3},{0xF949,5033,3},{0xF94A,5036,3},{0xF94B,5039,3},
    {0xF94C,5042,3},{0xF94D,5045,3},{0xF94E,5048,3},{0xF94F,5051,3},{0xF950,5054,3},{0xF951,5057,3},
    {0xF952,5060,3},{0xF953,5063,3},{0xF954,5066,3},{0xF955,5069,3},{0xF956,5072,3},{0xF957,5075,3},
    {0xF958,5078,3},{0xF959,5081,3},{0xF95A,5084,3},{0xF95B,5087,3},{0xF95C,5090,3},{0xF95D,5093,3},
    {0xF95E,5096,3},{0xF95F,5099,3},{0xF960,5102,3},{0xF961,5105,3},{0xF962,5108,3},{0xF963,5111,3},
    {0xF964,5114,3},{0xF965,5117,3},{0xF966,5120,3},{0xF967,5123,3},{0xF968,5126,3},{0xF969,5129,3},
    {0xF96A,5132,3},{0xF96B,5135,3},{0xF96C,5138,3},{0xF96D,5141,3},{0xF96E,5144,3},{0xF96F,5147,3},
    {0xF970,5150,3},{0xF971,5153,3},{0xF972,5156,3},{0xF973,5159,3},{0xF974,5162,3},{0xF975,5165,3},
    {0xF976,5168,3},{0xF977,5171,3},{0xF978,5174,3},{0xF979,5177,3},{0xF97A,5180,3},{0xF97B,5183,3},
    {0xF97C,5186,3},{0xF97D,5189,3},{0xF97E,5192,3},{0xF97F,5195,3},{0xF980,5198,3},{0xF981,5201,3},
    {0xF982,5204,3},{0xF983,5207,3},{0xF984,5210,3},{0xF985,5213,3},{0xF986,5216,3},{0xF987,5219,3},
    {0xF988,5222,3},{0xF989,5225,3},{0xF98A,5228,3},{0xF98B,5231,3},{0xF98C,5234,3},{0xF98D,5237,3},
    {0xF98E,5240,3},{0xF98F,5243,3},{0xF990,5246,3},{0xF991,5249,3},{0xF992,5252,3},{0xF993,5255,3},
    {0xF994,5258,3},{0xF995,5261,3},{0xF996,5264,3},{0xF997,5267,3},{0xF998,5270,3},{0xF999,5273,3},
    {0xF99A,5276,3},{0xF99B,5279,3},{0xF99C,5282,3},{0xF99D,5285,3},{0xF99E,5288,3},{0xF99F,5291,3},
    {0xF9A0,5294,3},{0xF9A1,5297,3},{0xF9A2,5300,3},{0xF9A3,5303,3},{0xF9A4,5306,3},{0xF9A5,5309,3},
    {0xF9A6,5312,3},{0xF9A7,5315,3},{0xF9A8,5318,3},{0xF9A9,5321,3},{0xF9AA,5324,3},{0xF9AB,5327,3},
    {0xF9AC,5330,3},{0xF9AD,5333,3},{0xF9AE,5336,3},{0xF9AF,5339,3},{0xF9B0,5342,3},{0xF9B1,5345,3},
    {0xF9B2,5348,3},{0xF9B3,5351,3},{0xF9B4,5354,3},{0xF9B5,5357,3},{0xF9B6,5360,3},{0xF9B7,5363,3},
    {0xF9B8,5366,3},{0xF9B9,5369,3},{0xF9BA,5372,3},{0xF9BB,5375,3},{0xF9BC,5378,3},{0xF9BD,5381,3},
    {0xF9BE,5384,3},{0xF9BF,5387,3},{0xF9C0,5390,3},{0xF9C1,5393,3},{0xF9C2,5396,3},{0xF9C3,5399,3},
    {0xF9C4,5402,3},{0xF9C5,5405,3},{0xF9C6,5408,3},{0xF9C7,5411,3},{0xF9C8,5414,3},{0xF9C9,5417,3},
    {0xF9CA,5420,3},{0xF9CB,5423,3},{0xF9CC,5426,3},{0xF9CD,5429,3},{0xF9CE,5432,3},{0xF9CF,5435,3},
    {0xF9D0,5438,3},{0xF9D1,5441,3},{0xF9D2,5444,3},{0xF9D3,5447,3},{0xF9D4,5450,3},{0xF9D5,5453,3},
    {0xF9D6,5456,3},{0xF9D7,5459,3},{0xF9D8,5462,3},{0xF9D9,5465,3},{0xF9DA,5468,3},{0xF9DB,5471,3},
    {0xF9DC,5474,3},{0xF9DD,5477,3},{0xF9DE,5480,3},{0xF9DF,5483,3},{0xF9E0,5486,3},{0xF9E1,5489,3},
    {0xF9E2,5492,3},{0xF9E3,5495,3},{0xF9E4,5498,3},{0xF9E5,5501,3},{0xF9E6,5504,3},{0xF9E7,5507,3},
    {0xF9E8,5510,3},{0xF9E9,5513,3},{0xF9EA,5516,3},{0xF9EB,5519,3},{0xF9EC,5522,3},{0xF9ED,5525,3},
    {0xF9EE,5528,3},{0xF9EF,5531,3},{0xF9F0,5534,3},{0xF9F1,5537,3},{0xF9F2,5540,3},{0xF9F3,5543,3},
    {0xF9F4,5546,3},{0xF9F5,5549,3},{0xF9F6,5552,3},{0xF9F7,5555,3},{0xF9F8,5558,3},{0xF9F9,5561,3},
    {0xF9FA,5564,3},{0xF9FB,5567,3},{0xF9FC,5570,3},{0xF9FD,5573,3},{0xF9FE,5576,3},{0xF9FF,5579,3},
    {0xFA00,5582,3},{0xFA01,5585,3},{0xFA02,5588,3},{0xFA03,5591,3},{0xFA04,5594,3},{0xFA05,5597,3},
    {0xFA06,5600,3},{0xFA07,5603,3},{0xFA08,5606,3},{0xFA09,5609,3},{0xFA0A,5612,3},{0xFA0B,5615,3},
    {0xFA0C,5618,3},{0xFA0D,5621,3},{0xFA10,5624,3},{0xFA12,5627,3},{0xFA15,5630,3},{0xFA16,5633,3},
    {0xFA17,5636,3},{0xFA18,5639,3},{0xFA19,5642,3},{0xFA1A,5645,3},{0xFA1B,5648,3},{0xFA1C,5651,3},
    {0xFA1D,5654,3},{0xFA1E,5657,3},{0xFA20,5660,3},{0xFA22,5663,3},{0xFA25,5666,3},{0xFA26,5669,3},
    {0xFA2A,5672,3},{0xFA2B,5675,3},{0xFA2C,5678,3},{0xFA2D,5681,3},{0xFA2E,5684,3},{0xFA2F,5687,3},
    {0xFA30,5690,3},{0xFA31,5693,3},{0xFA32,5696,3},{0xFA33,5699,3},{0xFA34,5702,3},{0xFA35,5705,3},
    {0xFA36,5708,3},{0xFA37,5711,3},{0xFA38,5714,3},{0xFA39,5717,3},{0xFA3A,5720,3},{0xFA3B,5723,3},
    {0xFA3C,5726,3},{0xFA3D,5729,3},{0xFA3E,5732,3},{0xFA3F,5735,3},{0xFA40,5738,3},{0xFA41,5741,3},
    {0xFA42,5744,3},{0xFA43,5747,3},{0xFA44,5750,3},{0xFA45,5753,3},{0xFA46,5756,3},{0xFA47,5759,3},
    {0xFA48,5762,3},{0xFA49,5765,3},{0xFA4A,5768,3},{0xFA4B,5771,3},{0xFA4C,5774,3},{0xFA4D,5777,3},
    {0xFA4E,5780,3},{0xFA4F,5783,3},{0xFA50,5786,3},{0xFA51,5789,3},{0xFA52,5792,3},{0xFA53,5795,3},
    {0xFA54,5798,3},{0xFA55,5801,3},{0xFA56,5804,3},{0xFA57,5807,3},{0xFA58,5810,3},{0xFA59,5813,3},
    {0xFA5A,5816,3},{0xFA5B,5819,3},{0xFA5C,5822,3},{0xFA5D,5825,3},{0xFA5E,5828,3},{0xFA5F,5831,3},
    {0xFA60,5834,3},{0xFA61,5837,3},{0xFA62,5840,3},{0xFA63,5843,3},{0xFA64,5846,3},{0xFA65,5849,3},
    {0xFA66,5852,3},{0xFA67,5855,3},{0xFA68,5858,3},{0xFA69,5861,3},{0xFA6A,5864,3},{0xFA6B,5867,3},
    {0xFA6C,5870,4},{0xFA6D,5874,3},{0xFA70,5877,3},{0xFA71,5880,3},{0xFA72,5883,3},{0xFA73,5886,3},
    {0xFA74,5889,3},{0xFA75,5892,3},{0xFA76,5895,3},{0xFA77,5898,3},{0xFA78,5901,3},{0xFA79,5904,3},
    {0xFA7A,5907,3},{0xFA7B,5910,3},{0xFA7C,5913,3},{0xFA7D,5916,3},{0xFA7E,5919,3},{0xFA7F,5922,3},
    {0xFA80,5925,3},{0xFA81,5928,3},{0xFA82,5931,3},{0xFA83,5934,3},{0xFA84,5937,3},{0xFA85,5940,3},
    {0xFA86,5943,3},{0xFA87,5946,3},{0xFA88,5949,3},{0xFA89,5952,3},{0xFA8A,5955,3},{0xFA8B,5958,3},
    {0xFA8C,5961,3},{0xFA8D,5964,3},{0xFA8E,5967,3},{0xFA8F,5970,3},{0xFA90,5973,3},{0xFA91,5976,3},
    {0xFA92,5979,3},{0xFA93,5982,3},{0xFA94,5985,3},{0xFA95,5988,3},{0xFA96,5991,3},{0xFA97,5994,3},
    {0xFA98,5997,3},{0xFA99,6000,3},{0xFA9A,6003,3},{0xFA9B,6006,3},{0xFA9C,6009,3},{0xFA9D,6012,3},
    {0xFA9E,6015,3},{0xFA9F,6018,3},{0xFAA0,6021,3},{0xFAA1,6024,3},{0xFAA2,6027,3},{0xFAA3,6030,3},
    {0xFAA4,6033,3},{0xFAA5,6036,3},{0xFAA6,6039,3},{0xFAA7,6042,3},{0xFAA8,6045,3},{0xFAA9,6048,3},
    {0xFAAA,6051,3},{0xFAAB,6054,3},{0xFAAC,6057,3},{0xFAAD,6060,3},{0xFAAE,6063,3},{0xFAAF,6066,3},
    {0xFAB0,6069,3},{0xFAB1,6072,3},{0xFAB2,6075,3},{0xFAB3,6078,3},{0xFAB4,6081,3},{0xFAB5,6084,3},
    {0xFAB6,6087,3},{0xFAB7,6090,3},{0xFAB8,6093,3},{0xFAB9,6096,3},{0xFABA,6099,3},{0xFABB,6102,3},
    {0xFABC,6105,3},{0xFABD,6108,3},{0xFABE,6111,3},{0xFABF,6114,3},{0xFAC0,6117,3},{0xFAC1,6120,3},
    {0xFAC2,6123,3},{0xFAC3,6126,3},{0xFAC4,6129,3},{0xFAC5,6132,3},{0xFAC6,6135,3},{0xFAC7,6138,3},
    {0xFAC8,6141,3},{0xFAC9,6144,3},{0xFACA,6147,3},{0xFACB,6150,3},{0xFACC,6153,3},{0xFACD,6156,3},
    {0xFACE,6159,3},{0xFACF,6162,4},{0xFAD0,6166,4},{0xFAD1,6170,4},{0xFAD2,6174,3},{0xFAD3,6177,3},
    {0xFAD4,6180,3},{0xFAD5,6183,4},{0xFAD6,6187,4},{0xFAD7,6191,4},{0xFAD8,6195,3},{0xFAD9,6198,3},
    {0xFB00,6201,2},{0xFB01,6203,2},{0xFB02,6205,2},{0xFB03,6207,3},{0xFB04,6210,3},{0xFB05,6213,2},
    {0xFB06,6215,2},{0xFB13,6217,4},{0xFB14,6221,4},{0xFB15,6225,4},{0xFB16,6229,4},{0xFB17,6233,4},
    {0xFB1D,6237,4},{0xFB1F,6241,4},{0xFB20,6245,2},{0xFB21,6247,2},{0xFB22,6249,2},{0xFB23,6251,2},
    {0xFB24,6253,2},{0xFB25,6255,2},{0xFB26,6257,2},{0xFB27,6259,2},{0xFB28,6261,2},{0xFB29,6263,1},
    {0xFB2A,6264,4},{0xFB2B,6268,4},{0xFB2C,6272,6},{0xFB2D,6278,6},{0xFB2E,6284,4},{0xFB2F,6288,4},
    {0xFB30,6292,4},{0xFB31,6296,4},{0xFB32,6300,4},{0xFB33,6304,4},{0xFB34,6308,4},{0xFB35,6312,4},
    {0xFB36,6316,4},{0xFB38,6320,4},{0xFB39,6324,4},{0xFB3A,6328,4},{0xFB3B,6332,4},{0xFB3C,6336,4},
    {0xFB3E,6340,4},{0xFB40,6344,4},{0xFB41,6348,4},{0xFB43,6352,4},{0xFB44,6356,4},{0xFB46,6360,4},
    {0xFB47,6364,4},{0xFB48,6368,4},{0xFB49,6372,4},{0xFB4A,6376,4},{0xFB4B,6380,4},{0xFB4C,6384,4},
    {0xFB4D,6388,4},{0xFB4E,6392,4},{0xFB4F,6396,4},{0xFB50,6400,2},{0xFB51,6402,2},{0xFB52,6404,2},
    {0xFB53,6406,2},{0xFB54,6408,2},{0xFB55,6410,2},{0xFB56,6412,2},{0xFB57,6414,2},{0xFB58,6416,2},
    {0xFB59,6418,2},{0xFB5A,6420,2},{0xFB5B,6422,2},{0xFB5C,6424,2},{0xFB5D,6426,2},{0xFB5E,6428,2},
    {0xFB5F,6430,2},{0xFB60,6432,2},{0xFB61,6434,2},{0xFB62,6436,2},{0xFB63,6438,2},{0xFB64,6440,2},
    {0xFB65,6442,2},{0xFB66,6444,2},{0xFB67,6446,2},{0xFB68,6448,2},{0xFB69,6450,2},{0xFB6A,6452,2},
    {0xFB6B,6454,2},{0xFB6C,6456,2},{0xFB6D,6458,2},{0xFB6E,6460,2},{0xFB6F,6462,2},{0xFB70,6464,2},
    {0xFB71,6466,2},{0xFB72,6468,2},{0xFB73,6470,2},{0xFB74,6472,2},{0xFB75,6474,2},{0xFB76,6476,2},
    {0xFB77,6478,2},{0xFB78,6480,2},{0xFB79,6482,2},{0xFB7A,6484,2},{0xFB7B,6486,2},{0xFB7C,6488,2},
    {0xFB7D,6490,2},{0xFB7E,6492,2},{0xFB7F,6494,2},{0xFB80,6496,2},{0xFB81,6498,2},{0xFB82,6500,2},
    {0xFB83,6502,2},{0xFB84,6504,2},{0xFB85,6506,2},{0xFB86,6508,2},{0xFB87,6510,2},{0xFB88,6512,2},
    {0xFB89,6514,2},{0xFB8A,6516,2},{0xFB8B,6518,2},{0xFB8C,6520,2},{0xFB8D,6522,2},{0xFB8E,6524,2},
    {0xFB8F,6526,2},{0xFB90,6528,2},{0xFB91,6530,2},{0xFB92,6532,2},{0xFB93,6534,2},{0xFB94,6536,2},
    {0xFB95,6538,2},{0xFB96,6540,2},{0xFB97,6542,2},{0xFB98,6544,2},{0xFB99,6546,2},{0xFB9A,6548,2},
    {0xFB9B,6550,2},{0xFB9C,6552,2},{0xFB9D,6554,2},{0xFB9E,6556,2},{0xFB9F,6558,2},{0xFBA0,6560,2},
    {0xFBA1,6562,2},{0xFBA2,6564,2},{0xFBA3,6566,2},{0xFBA4,6568,2},{0xFBA5,6570,2},{0xFBA6,6572,2},
    {0xFBA7,6574,2},{0xFBA8,6576,2},{0xFBA9,6578,2},{0xFBAA,6580,2},{0xFBAB,6582,2},{0xFBAC,6584,2},
    {0xFBAD,6586,2},{0xFBAE,6588,2},{0xFBAF,6590,2},{0xFBB0,6592,2},{0xFBB1,6594,2},{0xFBD3,6596,2},
    {0xFBD4,6598,2},{0xFBD5,6600,2},{0xFBD6,6602,2},{0xFBD7,6604,2},{0xFBD8,6606,2},{0xFBD9,6608,2},
    {0xFBDA,6610,2},{0xFBDB,6612,2},{0xFBDC,6614,2},{0xFBDD,6616,4},{0xFBDE,6620,2},{0xFBDF,6622,2},
    {0xFBE0,6624,2},{0xFBE1,6626,2},{0xFBE2,6628,2},{0xFBE3,6630,2},{0xFBE4,6632,2},{0xFBE5,6634,2},
    {0xFBE6,6636,2},{0xFBE7,6638,2},{0xFBE8,6640,2},{0xFBE9,6642,2},{0xFBEA,6644,4},{0xFBEB,6648,4},
    {0xFBEC,6652,4},{0xFBED,6656,4},{0xFBEE,6660,4},{0xFBEF,6664,4},{0xFBF0,6668,4},{0xFBF1,6672,4},
    {0xFBF2,6676,4},{0xFBF3,6680,4},{0xFBF4,6684,4},{0xFBF5,6688,4},{0xFBF6,6692,4},{0xFBF7,6696,4},
    {0xFBF8,6700,4},{0xFBF9,6704,4},{0xFBFA,6708,4},{0xFBFB,6712,4},{0xFBFC,6716,2},{0xFBFD,6718,2},
    {0xFBFE,6720,2},{0xFBFF,6722,2},{0xFC00,6724,4},{0xFC01,6728,4},{0xFC02,6732,4},{0xFC03,6736,4},
    {0xFC04,6740,4},{0xFC05,6744,4},{0xFC06,6748,4},{0xFC07,6752,4},{0xFC08,6756,4},{0xFC09,6760,4},
    {0xFC0A,6764,4},{0xFC0B,6768,4},{0xFC0C,6772,4},{0xFC0D,6776,4},{0xFC0E,6780,4},{0xFC0F,6784,4},
    {0xFC10,6788,4},{0xFC11,6792,4},{0xFC12,6796,4},{0xFC13,6800,4},{0xFC14,6804,4},{0xFC15,6808,4},
    {0xFC16,6812,4},{0xFC17,6816,4},{0xFC18,6820,4},{0xFC19,6824,4},{0xFC1A,6828,4},{0xFC1B,6832,4},
    {0xFC1C,6836,4},{0xFC1D,6840,4},{0xFC1E,6844,4},{0xFC1F,6848,4},{0xFC20,6852,4},{0xFC21,6856,4},
    {0xFC22,6860,4},{0xFC23,6864,4},{0xFC24,6868,4},{0xFC25,6872,4},{0xFC26,6876,4},{0xFC27,6880,4},
    {0xFC28,6884,4},{0xFC29,6888,4},{0xFC2A,6892,4},{0xFC2B,6896,4},{0xFC2C,6900,4},{0xFC2D,6904,4},
    {0xFC2E,6908,4},{0xFC2F,6912,4},{0xFC30,6916,4},{0xFC31,6920,4},{0xFC32,6924,4},{0xFC33,6928,4},
    {0xFC34,6932,4},{0xFC35,6936,4},{0xFC36,6940,4},{0xFC37,6944,4},{0xFC38,6948,4},{0xFC39,6952,4},
    {0xFC3A,6956,4},{0xFC3B,6960,4},{0xFC3C,6964,4},{0xFC3D,6968,4},{0xFC3E,6972,4},{0xFC3F,6976,4},
    {0xFC40,6980,4},{0xFC41,6984,4},{0xFC42,6988,4},{0xFC43,6992,4},{0xFC44,6996,4},{0xFC45,7000,4},
    {0xFC46,7004,4},{0xFC47,7008,4},{0xFC48,7012,4},{0xFC49,7016,4},{0xFC4A,7020,4},{0xFC4B,7024,4},
    {0xFC4C,7028,4},{0xFC4D,7032,4},{0xFC4E,7036,4},{0xFC4F,7040,4},{0xFC50,7044,4},{0xFC51,7048,4},
    {0xFC52,7052,4},{0xFC53,7056,4},{0xFC54,7060,4},{0xFC55,7064,4},{0xFC56,7068,4},{0xFC57,7072,4},
    {0xFC58,7076,4},{0xFC59,7080,4},{0xFC5A,7084,4},{0xFC5B,7088,4},{0xFC5C,7092,4},{0xFC5D,7096,4},
    {0xFC5E,7100,5},{0xFC5F,7105,5},{0xFC60,7110,5},{0xFC61,7115,5},{0xFC62,7120,5},{0xFC63,7125,5},
    {0xFC64,7130,4},{0xFC65,7134,4},{0xFC66,7138,4},{0xFC67,7142,4},{0xFC68,7146,4},{0xFC69,7150,4},
    {0xFC6A,7154,4},{0xFC6B,7158,4},{0xFC6C,7162,4},{0xFC6D,7166,4},{0xFC6E,7170,4},{0xFC6F,7174,4},
    {0xFC70,7178,4},{0xFC71,7182,4},{0xFC72,7186,4},{0xFC73,7190,4},{0xFC74,7194,4},{0xFC75,7198,4},
    {0xFC76,7202,4},{0xFC77,7206,4},{0xFC78,7210,4},{0xFC79,7214,4},{0xFC7A,7218,4},{0xFC7B,7222,4},
    {0xFC7C,7226,4},{0xFC7D,7230,4},{0xFC7E,7234,4},{0xFC7F,7238,4},{0xFC80,7242,4},{0xFC81,7246,4},
    {0xFC82,7250,4},{0xFC83,7254,4},{0xFC84,7258,4},{0xFC85,7262,4},{0xFC86,7266,4},{0xFC87,7270,4},
    {0xFC88,7274,4},{0xFC89,7278,4},{0xFC8A,7282,4},{0xFC8B,7286,4},{0xFC8C,7290,4},{0xFC8D,7294,4},
    {0xFC8E,7298,4},{0xFC8F,7302,4},{0xFC90,7306,4},{0xFC91,7310,4},{0xFC92,7314,4},{0xFC93,7318,4},
    {0xFC94,7322,4},{0xFC95,7326,4},{0xFC96,7330,4},{0xFC97,7334,4},{0xFC98,7338,4},{0xFC99,7342,4},
    {0xFC9A,7346,4},{0xFC9B,7350,4},{0xFC9C,7354,4},{0xFC9D,7358,4},{0xFC9E,7362,4},{0xFC9F,7366,4},
    {0xFCA0,7370,4},{0xFCA1,7374,4},{0xFCA2,7378,4},{0xFCA3,7382,4},{0xFCA4,7386,4},{0xFCA5,7390,4},
    {0xFCA6,7394,4},{0xFCA7,7398,4},{0xFCA8,7402,4},{0xFCA9,7406,4},{0xFCAA,7410,4},{0xFCAB,7414,4},
    {0xFCAC,7418,4},{0xFCAD,7422,4},{0xFCAE,7426,4},{0xFCAF,7430,4},{0xFCB0,7434,4},{0xFCB1,7438,4},
    {0xFCB2,7442,4},{0xFCB3,7446,4},{0xFCB4,7450,4},{0xFCB5,7454,4},{0xFCB6,7458,4},{0xFCB7,7462,4},
    {0xFCB8,7466,4},{0xFCB9,7470,4},{0xFCBA,7474,4},{0xFCBB,7478,4},{0xFCBC,7482,4},{0xFCBD,7486,4},
    {0xFCBE,7490,4},{0xFCBF,7494,4},{0xFCC0,7498,4},{0xFCC1,7502,4},{0xFCC2,7506,4},{0xFCC3,7510,4},
    {0xFCC4,7514,4},{0xFCC5,7518,4},{0xFCC6,7522,4},{0xFCC7,7526,4},{0xFCC8,7530,4},{0xFCC9,7534,4},
    {0xFCCA,7538,4},{0xFCCB,7542,4},{0xFCCC,7546,4},{0xFCCD,7550,4},{0xFCCE,7554,4},{0xFCCF,7558,4},
    {0xFCD0,7562,4},{0xFCD1,7566,4},{0xFCD2,7570,4},{0xFCD3,7574,4},{0xFCD4,7578,4},{0xFCD5,7582,4},
    {0xFCD6,7586,4},{0xFCD7,7590,4},{0xFCD8,7594,4},{0xFCD9,7598,4},{0xFCDA,7602,4},{0xFCDB,7606,4},
    {0xFCDC,7610,4},{0xFCDD,7614,4},{0xFCDE,7618,4},{0xFCDF,7622,4},{0xFCE0,7626,4},{0xFCE1,7630,4},
    {0xFCE2,7634,4},{0xFCE3,7638,4},{0xFCE4,7642,4},{0xFCE5,7646,4},{0xFCE6,7650,4},{0xFCE7,7654,4},
    {0xFCE8,7658,4},{0xFCE9,7662,4},{0xFCEA,7666,4},{0xFCEB,7670,4},{0xFCEC,7674,4},{0xFCED,7678,4},
    {0xFCEE,7682,4},{0xFCEF,7686,4},{0xFCF0,7690,4},{0xFCF1,7694,4},{0xFCF2,7698,6},{0xFCF3,7704,6},
    {0xFCF4,7710,6},{0xFCF5,7716,4},{0xFCF6,7720,4},{0xFCF7,7724,4},{0xFCF8,7728,4},{0xFCF9,7732,4},
    {0xFCFA,7736,4},{0xFCFB,7740,4},{0xFCFC,7744,4},{0xFCFD,7748,4},{0xFCFE,7752,4},{0xFCFF,7756,4},
    {0xFD00,7760,4},{0xFD01,7764,4},{0xFD02,7768,4},{0xFD03,7772,4},{0xFD04,7776,4},{0xFD05,7780,4},
    {0xFD06,7784,4},{0xFD07,7788,4},{0xFD08,7792,4},{0xFD09,7796,4},{0xFD0A,7800,4},{0xFD0B,7804,4},
    {0xFD0C,7808,4},{0xFD0D,7812,4},{0xFD0E,7816,4},{0xFD0F,7820,4},{0xFD10,7824,4},{0xFD11,7828,4},
    {0xFD12,7832,4},{0xFD13,7836,4},{0xFD14,7840,4},{0xFD15,7844,4},{0xFD16,7848,4},{0xFD17,7852,4},
    {0xFD18,7856,4},{0xFD19,7860,4},{0xFD1A,7864,4},{0xFD1B,7868,4},{0xFD1C,7872,4},{0xFD1D,7876,4},
    {0xFD1E,7880,4},{0xFD1F,7884,4},{0xFD20,7888,4},{0xFD21,7892,4},{0xFD22,7896,4},{0xFD23,7900,4},
    {0xFD24,7904,4},{0xFD25,7908,4},{0xFD26,7912,4},{0xFD27,7916,4},{0xFD28,7920,4},{0xFD29,7924,4},
    {0xFD2A,7928,4},{0xFD2B,7932,4},{0xFD2C,7936,4},{0xFD2D,7940,4},{0xFD2E,7944,4},{0xFD2F,7948,4},
    {0xFD30,7952,4},{0xFD31,7956,4},{0xFD32,7960,4},{0xFD33,7964,4},{0xFD34,7968,4},{0xFD35,7972,4},
    {0xFD36,7976,4},{0xFD37,7980,4},{0xFD38,7984,4},{0xFD39,7988,4},{0xFD3A,7992,4},{0xFD3B,7996,4},
    {0xFD3C,8000,4},{0xFD3D,8004,4},{0xFD50,8008,6},{0xFD51,8014,6},{0xFD52,8020,6},{0xFD53,8026,6},
    {0xFD54,8032,6},{0xFD55,8038,6},{0xFD56,8044,6},{0xFD57,8050,6},{0xFD58,8056,6},{0xFD59,8062,6},
    {0xFD5A,8068,6},{0xFD5B,8074,6},{0xFD5C,8080,6},{0xFD5D,8086,6},{0xFD5E,8092,6},{0xFD5F,8098,6},
    {0xFD60,8104,6},{0xFD61,8110,6},{0xFD62,8116,6},{0xFD63,8122,6},{0xFD64,8128,6},{0xFD65,8134,6},
    {0xFD66,8140,6},{0xFD67,8146,6},{0xFD68,8152,6},{0xFD69,8158,6},{0xFD6A,8164,6},{0xFD6B,8170,6},
    {0xFD6C,8176,6},{0xFD6D,8182,6},{0xFD6E,8188,6},{0xFD6F,8194,6},{0xFD70,8200,6},{0xFD71,8206,6},
    {0xFD72,8212,6},{0xFD73,8218,6},{0xFD74,8224,6},{0xFD75,8230,6},{0xFD76,8236,6},{0xFD77,8242,6},
    {0xFD78,8248,6},{0xFD79,8254,6},{0xFD7A,8260,6},{0xFD7B,8266,6},{0xFD7C,8272,6},{0xFD7D,8278,6},
    {0xFD7E,8284,6},{0xFD7F,8290,6},{0xFD80,8296,6},{0xFD81,8302,6},{0xFD82,8308,6},{0xFD83,8314,6},
    {0xFD84,8320,6},{0xFD85,8326,6},{0xFD86,8332,6},{0xFD87,8338,6},{0xFD88,8344,6},{0xFD89,8350,6},
    {0xFD8A,8356,6},{0xFD8B,8362,6},{0xFD8C,8368,6},{0xFD8D,8374,6},{0xFD8E,8380,6},{0xFD8F,8386,6},
    {0xFD92,8392,6},{0xFD93,8398,6},{0xFD94,8404,6},{0xFD95,8410,6},{0xFD96,8416,6},{0xFD97,8422,6},
    {0xFD98,8428,6},{0xFD99,8434,6},{0xFD9A,8440,6},{0xFD9B,8446,6},{0xFD9C,8452,6},{0xFD9D,8458,6},
    {0xFD9E,8464,6},{0xFD9F,8470,6},{0xFDA0,8476,6},{0xFDA1,8482,6},{0xFDA2,8488,6},{0xFDA3,8494,6},
    {0xFDA4,8500,6},{0xFDA5,8506,6},{0xFDA6,8512,6},{0xFDA7,8518,6},{0xFDA8,8524,6},{0xFDA9,8530,6},
    {0xFDAA,8536,6},{0xFDAB,8542,6},{0xFDAC,8548,6},{0xFDAD,8554,6},{0xFDAE,8560,6},{0xFDAF,8566,6},
    {0xFDB0,8572,6},{0xFDB1,8578,6},{0xFDB2,8584,6},{0xFDB3,8590,6},{0xFDB4,8596,6},{0xFDB5,8602,6},
    {0xFDB6,8608,6},{0xFDB7,8614,6},{0xFDB8,8620,6},{0xFDB9,8626,6},{0xFDBA,8632,6},{0xFDBB,8638,6},
    {0xFDBC,8644,6},{0xFDBD,8650,6},{0xFDBE,8656,6},{0xFDBF,8662,6},{0xFDC0,8668,6},{0xFDC1,8674,6},
    {0xFDC2,8680,6},{0xFDC3,8686,6},{0xFDC4,8692,6},{0xFDC5,8698,6},{0xFDC6,8704,6},{0xFDC7,8710,6},
    {0xFDF0,8716,6},{0xFDF1,8722,6},{0xFDF2,8728,8},{0xFDF3,8736,8},{0xFDF4,8744,8},{0xFDF5,8752,8},
    {0xFDF6,8760,8},{0xFDF7,8768,8},{0xFDF8,8776,8},{0xFDF9,8784,6},{0xFDFA,8790,33},{0xFDFB,8823,15},
    {0xFDFC,8838,8},{0xFE10,8846,1},{0xFE11,8847,3},{0xFE12,8850,3},{0xFE13,8853,1},{0xFE14,8854,1},
    {0xFE15,8855,1},{0xFE16,8856,1},{0xFE17,8857,3},{0xFE18,8860,3},{0xFE19,8863,3},{0xFE30,8866,2},
    {0xFE31,8868,3},{0xFE32,8871,3},{0xFE33,8874,1},{0xFE34,8875,1},{0xFE35,8876,1},{0xFE36,8877,1},
    {0xFE37,8878,1},{0xFE38,8879,1},{0xFE39,8880,3},{0xFE3A,8883,3},{0xFE3B,8886,3},{0xFE3C,8889,3},
    {0xFE3D,8892,3},{0xFE3E,8895,3},{0xFE3F,8898,3},{0xFE40,8901,3},{0xFE41,8904,3},{0xFE42,8907,3},
    {0xFE43,8910,3},{0xFE44,8913,3},{0xFE47,8916,1},{0xFE48,8917,1},{0xFE49,8918,3},{0xFE4A,8921,3},
    {0xFE4B,8924,3},{0xFE4C,8927,3},{0xFE4D,8930,1},{0xFE4E,8931,1},{0xFE4F,8932,1},{0xFE50,8933,1},
    {0xFE51,8934,3},{0xFE52,8937,1},{0xFE54,8938,1},{0xFE55,8939,1},{0xFE56,8940,1},{0xFE57,8941,1},
    {0xFE58,8942,3},{0xFE59,8945,1},{0xFE5A,8946,1},{0xFE5B,8947,1},{0xFE5C,8948,1},{0xFE5D,8949,3},
    {0xFE5E,8952,3},{0xFE5F,8955,1},{0xFE60,8956,1},{0xFE61,8957,1},{0xFE62,8958,1},{0xFE63,8959,1},
    {0xFE64,8960,1},{0xFE65,8961,1},{0xFE66,8962,1},{0xFE68,8963,1},{0xFE69,8964,1},{0xFE6A,8965,1},
    {0xFE6B,8966,1},{0xFE70,8967,3},{0xFE71,8970,4},{0xFE72,8974,3},{0xFE74,8977,3},{0xFE76,8980,3},
    {0xFE77,8983,4},{0xFE78,8987,3},{0xFE79,8990,4},{0xFE7A,8994,3},{0xFE7B,8997,4},{0xFE7C,9001,3},
    {0xFE7D,9004,4},{0xFE7E,9008,3},{0xFE7F,9011,4},{0xFE80,9015,2},{0xFE81,9017,2},{0xFE82,9019,2},
    {0xFE83,9021,2},{0xFE84,9023,2},{0xFE85,9025,2},{0xFE86,9027,2},{0xFE87,9029,2},{0xFE88,9031,2},
    {0xFE89,9033,2},{0xFE8A,9035,2},{0xFE8B,9037,2},{0xFE8C,9039,2},{0xFE8D,9041,2},{0xFE8E,9043,2},
    {0xFE8F,9045,2},{0xFE90,9047,2},{0xFE91,9049,2},{0xFE92,9051,2},{0xFE93,9053,2},{0xFE94,9055,2},
    {0xFE95,9057,2},{0xFE96,9059,2},{0xFE97,9061,2},{0xFE98,9063,2},{0xFE99,9065,2},{0xFE9A,9067,2},
    {0xFE9B,9069,2},{0xFE9C,9071,2},{0xFE9D,9073,2},{0xFE9E,9075,2},{0xFE9F,9077,2},{0xFEA0,9079,2},
    {0xFEA1,9081,2},{0xFEA2,9083,2},{0xFEA3,9085,2},{0xFEA4,9087,2},{0xFEA5,9089,2},{0xFEA6,9091,2},
    {0xFEA7,9093,2},{0xFEA8,9095,2},{0xFEA9,9097,2},{0xFEAA,9099,2},{0xFEAB,9101,2},{0xFEAC,9103,2},
    {0xFEAD,9105,2},{0xFEAE,9107,2},{0xFEAF,9109,2},{0xFEB0,9111,2},{0xFEB1,9113,2},{0xFEB2,9115,2},
    {0xFEB3,9117,2},{0xFEB4,9119,2},{0xFEB5,9121,2},{0xFEB6,9123,2},{0xFEB7,9125,2},{0xFEB8,9127,2},
    {0xFEB9,9129,2},{0xFEBA,9131,2},{0xFEBB,9133,2},{0xFEBC,9135,2},{0xFEBD,9137,2},{0xFEBE,9139,2},
    {0xFEBF,9141,2},{0xFEC0,9143,2},{0xFEC1,9145,2},{0xFEC2,9147,2},{0xFEC3,9149,2},{0xFEC4,9151,2},
    {0xFEC5,9153,2},{0xFEC6,9155,2},{0xFEC7,9157,2},{0xFEC8,9159,2},{0xFEC9,9161,2},{0xFECA,9163,2},
    {0xFECB,9165,2},{0xFECC,9167,2},{0xFECD,9169,2},{0xFECE,9171,2},{0xFECF,9173,2},{0xFED0,9175,2},
    {0xFED1,9177,2},{0xFED2,9179,2},{0xFED3,9181,2},{0xFED4,9183,2},{0xFED5,9185,2},{0xFED6,9187,2},
    {0xFED7,9189,2},{0xFED8,9191,2},{0xFED9,9193,2},{0xFEDA,9195,2},{0xFEDB,9197,2},{0xFEDC,9199,2},
    {0xFEDD,9201,2},{0xFEDE,9203,2},{0xFEDF,9205,2},{0xFEE0,9207,2},{0xFEE1,9209,2},{0xFEE2,9211,2},
    {0xFEE3,9213,2},{0xFEE4,9215,2},{0xFEE5,9217,2},{0xFEE6,9219,2},{0xFEE7,9221,2},{0xFEE8,9223,2},
    {0xFEE9,9225,2},{0xFEEA,9227,2},{0xFEEB,9229,2},{0xFEEC,9231,2},{0xFEED,9233,2},{0xFEEE,9235,2},
    {0xFEEF,9237,2},{0xFEF0,9239,2},{0xFEF1,9241,2},{0xFEF2,9243,2},{0xFEF3,9245,2},{0xFEF4,9247,2},
    {0xFEF5,9249,4},{0xFEF6,9253,4},{0xFEF7,9257,4},{0xFEF8,9261,4},{0xFEF9,9265,4},{0xFEFA,9269,4},
    {0xFEFB,9273,4},{0xFEFC,9277,4},{0xFF01,9281,1},{0xFF02,9282,1},{0xFF03,9283,1},{0xFF04,9284,1},
    {0xFF05,9285,1},{0xFF06,9286,1},{0xFF07,9287,1},{0xFF08,9288,1},{0xFF09,9289,1},{0xFF0A,9290,1},
    {0xFF0B,9291,1},{0xFF0C,9292,1},{0xFF0D,9293,1},{0xFF0E,9294,1},{0xFF0F,9295,1},{0xFF10,9296,1},
    {0xFF11,9297,1},{0xFF12,9298,1},{0xFF13,9299,1},{0xFF14,9300,1},{0xFF15,9301,1},{0xFF16,9302,1},
    {0xFF17,9303,1},{0xFF18,9304,1},{0xFF19,9305,1},{0xFF1A,9306,1},{0xFF1B,9307,1},{0xFF1C,9308,1},
    {0xFF1D,9309,1},{0xFF1E,9310,1},{0xFF1F,9311,1},{0xFF20,9312,1},{0xFF21,9313,1},{0xFF22,9314,1},
    {0xFF23,9315,1},{0xFF24,9316,1},{0xFF25,9317,1},{0xFF26,9318,1},{0xFF27,9319,1},{0xFF28,9320,1},
    {0xFF29,9321,1},{0xFF2A,9322,1},{0xFF2B,9323,1},{0xFF2C,9324,1},{0xFF2D,9325,1},{0xFF2E,9326,1},
    {0xFF2F,9327,1},{0xFF30,9328,1},{0xFF31,9329,1},{0xFF32,9330,1},{0xFF33,9331,1},{0xFF34,9332,1},
    {0xFF35,9333,1},{0xFF36,9334,1},{0xFF37,9335,1},{0xFF38,9336,1},{0xFF39,9337,1},{0xFF3A,9338,1},
    {0xFF3B,9339,1},{0xFF3C,9340,1},{0xFF3D,9341,1},{0xFF3E,9342,1},{0xFF3F,9343,1},{0xFF40,9344,1},
    {0xFF41,9345,1},{0xFF42,9346,1},{0xFF43,9347,1},{0xFF44,9348,1},{0xFF45,9349,1},{0xFF46,9350,1},
    {0xFF47,9351,1},{0xFF48,9352,1},{0xFF49,9353,1},{0xFF4A,9354,1},{0xFF4B,9355,1},{0xFF4C,9356,1},
    {0xFF4D,9357,1},{0xFF4E,9358,1},{0xFF4F,9359,1},{0xFF50,9360,1},{0xFF51,9361,1},{0xFF52,9362,1},
    {0xFF53,9363,1},{0xFF54,9364,1},{0xFF55,9365,1},{0xFF56,9366,1},{0xFF57,9367,1},{0xFF58,9368,1},
    {0xFF59,9369,1},{0xFF5A,9370,1},{0xFF5B,9371,1},{0xFF5C,9372,1},{0xFF5D,9373,1},{0xFF5E,9374,1},
    {0xFF5F,9375,3},{0xFF60,9378,3},{0xFF61,9381,3},{0xFF62,9384,3},{0xFF63,9387,3},{0xFF64,9390,3},
    {0xFF65,9393,3},{0xFF66,9396,3},{0xFF67,9399,3},{0xFF68,9402,3},{0xFF69,9405,3},{0xFF6A,9408,3},
    {0xFF6B,9411,3},{0xFF6C,9414,3},{0xFF6D,9417,3},{0xFF6E,9420,3},{0xFF6F,9423,3},{0xFF70,9426,3},
    {0xFF71,9429,3},{0xFF72,9432,3},{0xFF73,9435,3},{0xFF74,9438,3},{0xFF75,9441,3},{0xFF76,9444,3},
    {0xFF77,9447,3},{0xFF78,9450,3},{0xFF79,9453,3},{0xFF7A,9456,3},{0xFF7B,9459,3},{0xFF7C,9462,3},
    {0xFF7D,9465,3},{0xFF7E,9468,3},{0xFF7F,9471,3},{0xFF80,9474,3},{0xFF81,9477,3},{0xFF82,9480,3},
    {0xFF83,9483,3},{0xFF84,9486,3},{0xFF85,9489,3},{0xFF86,9492,3},{0xFF87,9495,3},{0xFF88,9498,3},
    {0xFF89,9501,3},{0xFF8A,9504,3},{0xFF8B,9507,3},{0xFF8C,9510,3},{0xFF8D,9513,3},{0xFF8E,9516,3},
    {0xFF8F,9519,3},{0xFF90,9522,3},{0xFF91,9525,3},{0xFF92,9528,3},{0xFF93,9531,3},{0xFF94,9534,3},
    {0xFF95,9537,3},{0xFF96,9540,3},{0xFF97,9543,3},{0xFF98,9546,3},{0xFF99,9549,3},{0xFF9A,9552,3},
    {0xFF9B,9555,3},{0xFF9C,9558,3},{0xFF9D,9561,3},{0xFF9E,9564,3},{0xFF9F,9567,3},{0xFFA0,9570,3},
    {0xFFA1,9573,3},{0xFFA2,9576,3},{0xFFA3,9579,3},{0xFFA4,9582,3},{0xFFA5,9585,3},{0xFFA6,9588,3},
    {0xFFA7,9591,3},{0xFFA8,9594,3},{0xFFA9,9597,3},{0xFFAA,9600,3},{0xFFAB,9603,3},{0xFFAC,9606,3},
    {0xFFAD,9609,3},{0xFFAE,9612,3},{0xFFAF,9615,3},{0xFFB0,9618,3},{0xFFB1,9621,3},{0xFFB2,9624,3},
    {0xFFB3,9627,3},{0xFFB4,9630,3},{0xFFB5,9633,3},{0xFFB6,9636,3},{0xFFB7,9639,3},{0xFFB8,9642,3},
    {0xFFB9,9645,3},{0xFFBA,9648,3},{0xFFBB,9651,3},{0xFFBC,9654,3},{0xFFBD,9657,3},{0xFFBE,9660,3},
    {0xFFC2,9663,3},{0xFFC3,9666,3},{0xFFC4,9669,3},{0xFFC5,9672,3},{0xFFC6,9675,3},{0xFFC7,9678,3},
    {0xFFCA,9681,3},{0xFFCB,9684,3},{0xFFCC,9687,3},{0xFFCD,9690,3},{0xFFCE,9693,3},{0xFFCF,9696,3},
    {0xFFD2,9699,3},{0xFFD3,9702,3},{0xFFD4,9705,3},{0xFFD5,9708,3},{0xFFD6,9711,3},{0xFFD7,9714,3},
    {0xFFDA,9717,3},{0xFFDB,9720,3},{0xFFDC,9723,3},{0xFFE0,9726,2},{0xFFE1,9728,2},{0xFFE2,9730,2},
    {0xFFE3,9732,3},{0xFFE4,9735,2},{0xFFE5,9737,2},{0xFFE6,9739,3},{0xFFE8,9742,3},{0xFFE9,9745,3},
    {0xFFEA,9748,3},{0xFFEB,9751,3},{0xFFEC,9754,3},{0xFFED,9757,3},{0xFFEE,9760,3},{0x1D15E,9763,8},
    {0x1D15F,9771,8},{0x1D160,9779,12},{0x1D161,9791,12},{0x1D162,9803,12},{0x1D163,9815,12},{0x1D164,9827,12},
    {0x1D1BB,9839,8},{0x1D1BC,9847,8},{0x1D1BD,9855,12},{0x1D1BE,9867,12},{0x1D1BF,9879,12},{0x1D1C0,9891,12},
    {0x1D400,9903,1},{0x1D401,9904,1},{0x1D402,9905,1},{0x1D403,9906,1},{0x1D404,9907,1},{0x1D405,9908,1},
    {0x1D406,9909,1},{0x1D407,9910,1},{0x1D408,9911,1},{0x1D409,9912,1},{0x1D40A,9913,1},{0x1D40B,9914,1},
    {0x1D40C,9915,1},{0x1D40D,9916,1},{0x1D40E,9917,1},{0x1D40F,9918,1},{0x1D410,9919,1},{0x1D411,9920,1},
    {0x1D412,9921,1},{0x1D413,9922,1},{0x1D414,9923,1},{0x1D415,9924,1},{0x1D416,9925,1},{0x1D417,9926,1},
    {0x1D418,9927,1},{0x1D419,9928,1},{0x1D41A,9929,1},{0x1D41B,9930,1},{0x1D41C,9931,1},{0x1D41D,9932,1},
    {0x1D41E,9933,1},{0x1D41F,9934,1},{0x1D420,9935,1},{0x1D421,9936,1},{0x1D422,9937,1},{0x1D423,9938,1},
    {0x1D424,9939,1},{0x1D425,9940,1},{0x1D426,9941,1},{0x1D427,9942,1},{0x1D428,9943,1},{0x1D429,9944,1},
    {0x1D42A,9945,1},{0x1D42B,9946,1},{0x1D42C,9947,1},{0x1D42D,9948,1},{0x1D42E,9949,1},{0x1D42F,9950,1},
    {0x1D430,9951,1},{0x1D431,9952,1},{0x1D432,9953,1},{0x1D433,9954,1},{0x1D434,9955,1},{0x1D435,9956,1},
    {0x1D436,9957,1},{0x1D437,9958,1},{0x1D438,9959,1},{0x1D439,9960,1},{0x1D43A,9961,1},{0x1D43B,9962,1},
    {0x1D43C,9963,1},{0x1D43D,9964,1},{0x1D43E,9965,1},{0x1D43F,9966,1},{0x1D440,9967,1},{0x1D441,9968,1},
    {0x1D442,9969,1},{0x1D443,9970,1},{0x1D444,9971,1},{0x1D445,9972,1},{0x1D446,9973,1},{0x1D447,9974,1},
    {0x1D448,9975,1},{0x1D449,9976,1},{0x1D44A,9977,1},{0x1D44B,9978,1},{0x1D44C,9979,1},{0x1D44D,9980,1},
    {0x1D44E,9981,1},{0x1D44F,9982,1},{0x1D450,9983,1},{0x1D451,9984,1},{0x1D452,9985,1},{0x1D453,9986,1},
    {0x1D454,9987,1},{0x1D456,9988,1},{0x1D457,9989,1},{0x1D458,9990,1},{0x1D459,9991,1},{0x1D45A,9992,1},
    {0x1D45B,9993,1},{0x1D45C,9994,1},{0x1D45D,9995,1},{0x1D45E,9996,1},{0x1D45F,9997,1},{0x1D460,9998,1},
    {0x1D461,9999,1},{0x1D462,10000,1},{0x1D463,10001,1},{0x1D464,10002,1},{0x1D465,10003,1},{0x1D466,10004,1},
    {0x1D467,10005,1},{0x1D468,10006,1},{0x1D469,10007,1},{0x1D46A,10008,1},{0x1D46B,10009,1},{0x1D46C,10010,1},
    {0x1D46D,10011,1},{0x1D46E,10012,1},{0x1D46F,10013,1},{0x1D470,10014,1},{0x1D471,10015,1},{0x1D472,10016,1},
    {0x1D473,10017,1},{0x1D474,10018,1},{0x1D475,10019,1},{0x1D476,10020,1},{0x1D477,10021,1},{0x1D478,10022,1},
    {0x1D479,10023,1},{0x1D47A,10024,1},{0x1D47B,10025,1},{0x1D47C,10026,1},{0x1D47D,10027,1},{0x1D47E,10028,1},
    {0x1D47F,10029,1},{0x1D480,10030,1},{0x1D481,10031,1},{0x1D482,10032,1},{0x1D483,10033,1},{0x1D484,10034,1},
    {0x1D485,10035,1},{0x1D486,10036,1},{0x1D487,10037,1},{0x1D488,10038,1},{0x1D489,10039,1},{0x1D48A,10040,1},
    {0x1D48B,10041,1},{0x1D48C,10042,1},{0x1D48D,10043,1},{0x1D48E,10044,1},{0x1D48F,10045,1},{0x1D490,10046,1},
    {0x1D491,10047,1},{0x1D492,10048,1},{0x1D493,10049,1},{0x1D494,10050,1},{0x1D495,10051,1},{0x1D496,10052,1},
    {0x1D497,10053,1},{0x1D498,10054,1},{0x1D499,10055,1},{0x1D49A,10056,1},{0x1D49B,10057,1},{0x1D49C,10058,1},
    {0x1D49E,10059,1},{0x1D49F,10060,1},{0x1D4A2,10061,1},{0x1D4A5,10062,1},{0x1D4A6,10063,1},{0x1D4A9,10064,1},
    {0x1D4AA,10065,1},{0x1D4AB,10066,1},{0x1D4AC,10067,1},{0x1D4AE,10068,1},{0x1D4AF,10069,1},{0x1D4B0,10070,1},
    {0x1D4B1,10071,1},{0x1D4B2,10072,1},{0x1D4B3,10073,1},{0x1D4B4,10074,1},{0x1D4B5,10075,1},{0x1D4B6,10076,1},
    {0x1D4B7,10077,1},{0x1D4B8,10078,1},{0x1D4B9,10079,1},{0x1D4BB,10080,1},{0x1D4BD,10081,1},{0x1D4BE,10082,1},
    {0x1D4BF,10083,1},{0x1D4C0,10084,1},{0x1D4C1,10085,1},{0x1D4C2,10086,1},{0x1D4C3,10087,1},{0x1D4C5,10088,1},
    {0x1D4C6,10089,1},{0x1D4C7,10090,1},{0x1D4C8,10091,1},{0x1D4C9,10092,1},{0x1D4CA,10093,1},{0x1D4CB,10094,1},
    {0x1D4CC,10095,1},{0x1D4CD,10096,1},{0x1D4CE,10097,1},{0x1D4CF,10098,1},{0x1D4D0,10099,1},{0x1D4D1,10100,1},
    {0x1D4D2,10101,1},{0x1D4D3,10102,1},{0x1D4D4,10103,1},{0x1D4D5,10104,1},{0x1D4D6,10105,1},{0x1D4D7,10106,1},
    {0x1D4D8,10107,1},{0x1D4D9,10108,1},{0x1D4DA,10109,1},{0x1D4DB,10110,1},{0x1D4DC,10111,1},{0x1D4DD,10112,1},
    {0x1D4DE,10113,1},{0x1D4DF,10114,1},{0x1D4E0,10115,1},{0x1D4E1,10116,1},{0x1D4E2,10117,1},{0x1D4E3,10118,1},
    {0x1D4E4,10119,1},{0x1D4E5,10120,1},{0x1D4E6,10121,1},{0x1D4E7,10122,1},{0x1D4E8,10123,1},{0x1D4E9,10124,1},
    {0x1D4EA,10125,1},{0x1D4EB,10126,1},{0x1D4EC,10127,1},{0x1D4ED,10128,1},{0x1D4EE,10129,1},{0x1D4EF,10130,1},
    {0x1D4F0,10131,1},{0x1D4F1,10132,1},{0x1D4F2,10133,1},{0x1D4F3,10134,1},{0x1D4F4,10135,1},{0x1D4F5,10136,1},
    {0x1D4F6,10137,1},{0x1D4F7,10138,1},{0x1D4F8,10139,1},{0x1D4F9,10140,1},{0x1D4FA,10141,1},{0x1D4FB,10142,1},
    {0x1D4FC,10143,1},{0x1D4FD,10144,1},{0x1D4FE,10145,1},{0x1D4FF,10146,1},{0x1D500,10147,1},{0x1D501,10148,1},
    {0x1D502,10149,1},{0x1D503,10150,1},{0x1D504,10151,1},{0x1D505,10152,1},{0x1D507,10153,1},{0x1D508,10154,1},
    {0x1D509,10155,1},{0x1D50A,10156,1},{0x1D50D,10157,1},{0x1D50E,10158,1},{0x1D50F,10159,1},{0x1D510,10160,1},
    {0x1D511,10161,1},{0x1D512,10162,1},{0x1D513,10163,1},{0x1D514,10164,1},{0x1D516,10165,1},{0x1D517,10166,1},
    {0x1D518,10167,1},{0x1D519,10168,1},{0x1D51A,10169,1},{0x1D51B,10170,1},{0x1D51C,10171,1},{0x1D51E,10172,1},
    {0x1D51F,10173,1},{0x1D520,10174,1},{0x1D521,10175,1},{0x1D522,10176,1},{0x1D523,10177,1},{0x1D524,10178,1},
    {0x1D525,10179,1},{0x1D526,10180,1},{0x1D527,10181,1},{0x1D528,10182,1},{0x1D529,10183,1},{0x1D52A,10184,1},
    {0x1D52B,10185,1},{0x1D52C,10186,1},{0x1D52D,10187,1},{0x1D52E,10188,1},{0x1D52F,10189,1},{0x1D530,10190,1},
    {0x1D531,10191,1},{0x1D532,10192,1},{0x1D533,10193,1},{0x1D534,10194,1},{0x1D535,10195,1},{0x1D536,10196,1},
    {0x1D537,10197,1},{0x1D538,10198,1},{0x1D539,10199,1},{0x1D53B,10200,1},{0x1D53C,10201,1},{0x1D53D,10202,1},
    {0x1D53E,10203,1},{0x1D540,10204,1},{0x1D541,10205,1},{0x1D542,10206,1},{0x1D543,10207,1},{0x1D544,10208,1},
    {0x1D546,10209,1},{0x1D54A,10210,1},{0x1D54B,10211,1},{0x1D54C,10212,1},{0x1D54D,10213,1},{0x1D54E,10214,1},
    {0x1D54F,10215,1},{0x1D550,10216,1},{0x1D552,10217,1},{0x1D553,10218,1},{0x1D554,10219,1},{0x1D555,10220,1},
    {0x1D556,10221,1},{0x1D557,10222,1},{0x1D558,10223,1},{0x1D559,10224,1},{0x1D55A,10225,1},{0x1D55B,10226,1},
    {0x1D55C,10227,1},{0x1D55D,10228,1},{0x1D55E,10229,1},{0x1D55F,10230,1},{0x1D560,10231,1},{0x1D561,10232,1},
    {0x1D562,10233,1},{0x1D563,10234,1},{0x1D564,10235,1},{0x1D565,10236,1},{0x1D566,10237,1},{0x1D567,10238,1},
    {0x1D568,10239,1},{0x1D569,10240,1},{0x1D56A,10241,1},{0x1D56B,10242,1},{0x1D56C,10243,1},{0x1D56D,10244,1},
    {0x1D56E,10245,1},{0x1D56F,10246,1},{0x1D570,10247,1},{0x1D571,10248,1},{0x1D572,10249,1},{0x1D573,10250,1},
    {0x1D574,10251,1},{0x1D575,10252,1},{0x1D576,10253,1},{0x1D577,10254,1},{0x1D578,10255,1},{0x1D579,10256,1},
    {0x1D57A,10257,1},{0x1D57B,10258,1},{0x1D57C,10259,1},{0x1D57D,10260,1},{0x1D57E,10261,1},{0x1D57F,10262,1},
    {0x1D580,10263,1},{0x1D581,10264,1},{0x1D582,10265,1},{0x1D583,10266,1},{0x1D584,10267,1},{0x1D585,10268,1},
    {0x1D586,10269,1},{0x1D587,10270,1},{0x1D588,10271,1},{0x1D589,10272,1},{0x1D58A,10273,1},{0x1D58B,10274,1},
    {0x1D58C,10275,1},{0x1D58D,10276,1},{0x1D58E,10277,1},{0x1D58F,10278,1},{0x1D590,10279,1},{0x1D591,10280,1},
    {0x1D592,10281,1},{0x1D593,10282,1},{0x1D594,10283,1},{0x1D595,10284,1},{0x1D596,10285,1},{0x1D597,10286,1},
    {0x1D598,10287,1},{0x1D599,10288,1},{0x1D59A,10289,1},{0x1D59B,10290,1},{0x1D59C,10291,1},{0x1D59D,10292,1},
    {0x1D59E,10293,1},{0x1D59F,10294,1},{0x1D5A0,10295,1},{0x1D5A1,10296,1},{0x1D5A2,10297,1},{0x1D5A3,10298,1},
    {0x1D5A4,10299,1},{0x1D5A5,10300,1},{0x1D5A6,10301,1},{0x1D5A7,10302,1},{0x1D5A8,10303,1},{0x1D5A9,10304,1},
    {0x1D5AA,10305,1},{0x1D5AB,10306,1},{0x1D5AC,10307,1},{0x1D5AD,10308,1},{0x1D5AE,10309,1},{0x1D5AF,10310,1},
    {0x1D5B0,10311,1},{0x1D5B1,10312,1},{0x1D5B2,10313,1},{0x1D5B3,10314,1},{0x1D5B4,10315,1},{0x1D5B5,10316,1},
    {0x1D5B6,10317,1},{0x1D5B7,10318,1},{0x1D5B8,10319,1},{0x1D5B9,10320,1},{0x1D5BA,10321,1},{0x1D5BB,10322,1},
    {0x1D5BC,10323,1},{0x1D5BD,10324,1},{0x1D5BE,10325,1},{0x1D5BF,10326,1},{0x1D5C0,10327,1},{0x1D5C1,10328,1},
    {0x1D5C2,10329,1},{0x1D5C3,10330,1},{0x1D5C4,10331,1},{0x1D5C5,10332,1},{0x1D5C6,10333,1},{0x1D5C7,10334,1},
    {0x1D5C8,10335,1},{0x1D5C9,10336,1},{0x1D5CA,10337,1},{0x1D5CB,10338,1},{0x1D5CC,10339,1},{0x1D5CD,10340,1},
    {0x1D5CE,10341,1},{0x1D5CF,10342,1},{0x1D5D0,10343,1},{0x1D5D1,10344,1},{0x1D5D2,10345,1},{0x1D5D3,10346,1},
    {0x1D5D4,10347,1},{0x1D5D5,10348,1},{0x1D5D6,10349,1},{0x1D5D7,10350,1},{0x1D5D8,10351,1},{0x1D5D9,10352,1},
    {0x1D5DA,10353,1},{0x1D5DB,10354,1},{0x1D5DC,10355,1},{0x1D5DD,10356,1},{0x1D5DE,10357,1},{0x1D5DF,10358,1},
    {0x1D5E0,10359,1},{0x1D5E1,10360,1},{0x1D5E2,10361,1},{0x1D5E3,10362,1},{0x1D5E4,10363,1},{0x1D5E5,10364,1},
    {0x1D5E6,10365,1},{0x1D5E7,10366,1},{0x1D5E8,10367,1},{0x1D5E9,10368,1},{0x1D5EA,10369,1},{0x1D5EB,10370,1},
    {0x1D5EC,10371,1},{0x1D5ED,10372,1},{0x1D5EE,10373,1},{0x1D5EF,10374,1},{0x1D5F0,10375,1},{0x1D5F1,10376,1},
    {0x1D5F2,10377,1},{0x1D5F3,10378,1},{0x1D5F4,10379,1},{0x1D5F5,10380,1},{0x1D5F6,10381,1},{0x1D5F7,10382,1},
    {0x1D5F8,10383,1},{0x1D5F9,10384,1},{0x1D5FA,10385,1},{0x1D5FB,10386,1},{0x1D5FC,10387,1},{0x1D5FD,10388,1},
    {0x1D5FE,10389,1},{0x1D5FF,10390,1},{0x1D600,10391,1},{0x1D601,10392,1},{0x1D602,10393,1},{0x1D603,10394,1},
    {0x1D604,10395,1},{0x1D605,10396,1},{0x1D606,10397,1},{0x1D607,10398,1},{0x1D608,10399,1},{0x1D609,10400,1},
    {0x1D60A,10401,1},{0x1D60B,10402,1},{0x1D60C,10403,1},{0x1D60D,10404,1},{0x1D60E,10405,1},{0x1D60F,10406,1},
    {0x1D610,10407,1},{0x1D611,10408,1},{0x1D612,10409,1},{0x1D613,10410,1},{0x1D614,10411,1},{0x1D615,10412,1},
    {0x1D616,10413,1},{0x1D617,10414,1},{0x1D618,10415,1},{0x1D619,10416,1},{0x1D61A,10417,1},{0x1D61B,10418,1},
    {0x1D61C,10419,1},{0x1D61D,10420,1},{0x1D61E,10421,1},{0x1D61F,10422,1},{0x1D620,10423,1},{0x1D621,10424,1},
    {0x1D622,10425,1},{0x1D623,10426,1},{0x1D624,10427,1},{0x1D625,10428,1},{0x1D626,10429,1},{0x1D627,10430,1},
    {0x1D628,10431,1},{0x1D629,10432,1},{0x1D62A,10433,1},{0x1D62B,10434,1},{0x1D62C,10435,1},{0x1D62D,10436,1},
    {0x1D62E,10437,1},{0x1D62F,10438,1},{0x1D630,10439,1},{0x1D631,10440,1},{0x1D632,10441,1},{0x1D633,10442,1},
    {0x1D634,10443,1},{0x1D635,10444,1},{0x1D636,10445,1},{0x1D637,10446,1},{0x1D638,10447,1},{0x1D639,10448,1},
    {0x1D63A,10449,1},{0x1D63B,10450,1},{0x1D63C,10451,1},{0x1D63D,10452,1},{0x1D63E,10453,1},{0x1D63F,10454,1},
    {0x1D640,10455,1},{0x1D641,10456,1},{0x1D642,10457,1},{0x1D643,10458,1},{0x1D644,10459,1},{0x1D645,10460,1},
    {0x1D646,10461,1},{0x1D647,10462,1},{0x1D648,10463,1},{0x1D649,10464,1},{0x1D64A,10465,1},{0x1D64B,10466,1},
    {0x1D64C,10467,1},{0x1D64D,10468,1},{0x1D64E,10469,1},{0x1D64F,10470,1},{0x1D650,10471,1},{0x1D651,10472,1},
    {0x1D652,10473,1},{0x1D653,10474,1},{0x1D654,10475,1},{0x1D655,10476,1},{0x1D656,10477,1},{0x1D657,10478,1},
    {0x1D658,10479,1},{0x1D659,10480,1},{0x1D65A,10481,1},{0x1D65B,10482,1},{0x1D65C,10483,1},{0x1D65D,10484,1},
    {0x1D65E,10485,1},{0x1D65F,10486,1},{0x1D660,10487,1},{0x1D661,10488,1},{0x1D662,10489,1},{0x1D663,10490,1},
    {0x1D664,10491,1},{0x1D665,10492,1},{0x1D666,10493,1},{0x1D667,10494,1},{0x1D668,10495,1},{0x1D669,10496,1},
    {0x1D66A,10497,1},{0x1D66B,10498,1},{0x1D66C,10499,1},{0x1D66D,10500,1},{0x1D66E,10501,1},{0x1D66F,10502,1},
    {0x1D670,10503,1},{0x1D671,10504,1},{0x1D672,10505,1},{0x1D673,10506,1},{0x1D674,10507,1},{0x1D675,10508,1},
    {0x1D676,10509,1},{0x1D677,10510,1},{0x1D678,10511,1},{0x1D679,10512,1},{0x1D67A,10513,1},{0x1D67B,10514,1},
    {0x1D67C,10515,1},{0x1D67D,10516,1},{0x1D67E,10517,1},{0x1D67F,10518,1},{0x1D680,10519,1},{0x1D681,10520,1},
    {0x1D682,10521,1},{0x1D683,10522,1},{0x1D684,10523,1},{0x1D685,10524,1},{0x1D686,10525,1},{0x1D687,10526,1},
    {0x1D688,10527,1},{0x1D689,10528,1},{0x1D68A,10529,1},{0x1D68B,10530,1},{0x1D68C,10531,1},{0x1D68D,10532,1},
    {0x1D68E,10533,1},{0x1D68F,10534,1},{0x1D690,10535,1},{0x1D691,10536,1},{0x1D692,10537,1},{0x1D693,10538,1},
    {0x1D694,10539,1},{0x1D695,10540,1},{0x1D696,10541,1},{0x1D697,10542,1},{0x1D698,10543,1},{0x1D699,10544,1},
    {0x1D69A,10545,1},{0x1D69B,10546,1},{0x1D69C,10547,1},{0x1D69D,10548,1},{0x1D69E,10549,1},{0x1D69F,10550,1},
    {0x1D6A0,10551,1},{0x1D6A1,10552,1},{0x1D6A2,10553,1},{0x1D6A3,10554,1},{0x1D6A4,10555,2},{0x1D6A5,10557,2},
    {0x1D6A8,10559,2},{0x1D6A9,10561,2},{0x1D6AA,10563,2},{0x1D6AB,10565,2},{0x1D6AC,10567,2},{0x1D6AD,10569,2},
    {0x1D6AE,10571,2},{0x1D6AF,10573,2},{0x1D6B0,10575,2},{0x1D6B1,10577,2},{0x1D6B2,10579,2},{0x1D6B3,10581,2},
    {0x1D6B4,10583,2},{0x1D6B5,10585,2},{0x1D6B6,10587,2},{0x1D6B7,10589,2},{0x1D6B8,10591,2},{0x1D6B9,10593,2},
    {0x1D6BA,10595,2},{0x1D6BB,10597,2},{0x1D6BC,10599,2},{0x1D6BD,10601,2},{0x1D6BE,10603,2},{0x1D6BF,10605,2},
    {0x1D6C0,10607,2},{0x1D6C1,10609,3},{0x1D6C2,10612,2},{0x1D6C3,10614,2},{0x1D6C4,10616,2},{0x1D6C5,10618,2},
    {0x1D6C6,10620,2},{0x1D6C7,10622,2},{0x1D6C8,10624,2},{0x1D6C9,10626,2},{0x1D6CA,10628,2},{0x1D6CB,10630,2},
    {0x1D6CC,10632,2},{0x1D6CD,10634,2},{0x1D6CE,10636,2},{0x1D6CF,10638,2},{0x1D6D0,10640,2},{0x1D6D1,10642,2},
    {0x1D6D2,10644,2},{0x1D6D3,10646,2},{0x1D6D4,10648,2},{0x1D6D5,10650,2},{0x1D6D6,10652,2},{0x1D6D7,10654,2},
    {0x1D6D8,10656,2},{0x1D6D9,10658,2},{0x1D6DA,10660,2},{0x1D6DB,10662,3},{0x1D6DC,10665,2},{0x1D6DD,10667,2},
    {0x1D6DE,10669,2},{0x1D6DF,10671,2},{0x1D6E0,10673,2},{0x1D6E1,10675,2},{0x1D6E2,10677,2},{0x1D6E3,10679,2},
    {0x1D6E4,10681,2},{0x1D6E5,10683,2},{0x1D6E6,10685,2},{0x1D6E7,10687,2},{0x1D6E8,10689,2},{0x1D6E9,10691,2},
    {0x1D6EA,10693,2},{0x1D6EB,10695,2},{0x1D6EC,10697,2},{0x1D6ED,10699,2},{0x1D6EE,10701,2},{0x1D6EF,10703,2},
    {0x1D6F0,10705,2},{0x1D6F1,10707,2},{0x1D6F2,10709,2},{0x1D6F3,10711,2},{0x1D6F4,10713,2},{0x1D6F5,10715,2},
    {0x1D6F6,10717,2},{0x1D6F7,10719,2},{0x1D6F8,10721,2},{0x1D6F9,10723,2},{0x1D6FA,10725,2},{0x1D6FB,10727,3},
    {0x1D6FC,10730,2},{0x1D6FD,10732,2},{0x1D6FE,10734,2},{0x1D6FF,10736,2},{0x1D700,10738,2},{0x1D701,10740,2},
    {0x1D702,10742,2},{0x1D703,10744,2},{0x1D704,10746,2},{0x1D705,10748,2},{0x1D706,10750,2},{0x1D707,10752,2},
    {0x1D708,10754,2},{0x1D709,10756,2},{0x1D70A,10758,2},{0x1D70B,10760,2},{0x1D70C,10762,2},{0x1D70D,10764,2},
    {0x1D70E,10766,2},{0x1D70F,10768,2},{0x1D710,10770,2},{0x1D711,10772,2},{0x1D712,10774,2},{0x1D713,10776,2},
    {0x1D714,10778,2},{0x1D715,10780,3},{0x1D716,10783,2},{0x1D717,10785,2},{0x1D718,10787,2},{0x1D719,10789,2},
    {0x1D71A,10791,2},{0x1D71B,10793,2},{0x1D71C,10795,2},{0x1D71D,10797,2},{0x1D71E,10799,2},{0x1D71F,10801,2},
    {0x1D720,10803,2},{0x1D721,10805,2},{0x1D722,10807,2},{0x1D723,10809,2},{0x1D724,10811,2},{0x1D725,10813,2},
    {0x1D726,10815,2},{0x1D727,10817,2},{0x1D728,10819,2},{0x1D729,10821,2},{0x1D72A,10823,2},{0x1D72B,10825,2},
    {0x1D72C,10827,2},{0x1D72D,10829,2},{0x1D72E,10831,2},{0x1D72F,10833,2},{0x1D730,10835,2},{0x1D731,10837,2},
    {0x1D732,10839,2},{0x1D733,10841,2},{0x1D734,10843,2},{0x1D735,10845,3},{0x1D736,10848,2},{0x1D737,10850,2},
    {0x1D738,10852,2},{0x1D739,10854,2},{0x1D73A,10856,2},{0x1D73B,10858,2},{0x1D73C,10860,2},{0x1D73D,10862,2},
    {0x1D73E,10864,2},{0x1D73F,10866,2},{0x1D740,10868,2},{0x1D741,10870,2},{0x1D742,10872,2},{0x1D743,10874,2},
    {0x1D744,10876,2},{0x1D745,10878,2},{0x1D746,10880,2},{0x1D747,10882,2},{0x1D748,10884,2},{0x1D749,10886,2},
    {0x1D74A,10888,2},{0x1D74B,10890,2},{0x1D74C,10892,2},{0x1D74D,10894,2},{0x1D74E,10896,2},{0x1D74F,10898,3},
    {0x1D750,10901,2},{0x1D751,10903,2},{0x1D752,10905,2},{0x1D753,10907,2},{0x1D754,10909,2},{0x1D755,10911,2},
    {0x1D756,10913,2},{0x1D757,10915,2},{0x1D758,10917,2},{0x1D759,10919,2},{0x1D75A,10921,2},{0x1D75B,10923,2},
    {0x1D75C,10925,2},{0x1D75D,10927,2},{0x1D75E,10929,2},{0x1D75F,10931,2},{0x1D760,10933,2},{0x1D761,10935,2},
    {0x1D762,10937,2},{0x1D763,10939,2},{0x1D764,10941,2},{0x1D765,10943,2},{0x1D766,10945,2},{0x1D767,10947,2},
    {0x1D768,10949,2},{0x1D769,10951,2},{0x1D76A,10953,2},{0x1D76B,10955,2},{0x1D76C,10957,2},{0x1D76D,10959,2},
    {0x1D76E,10961,2},{0x1D76F,10963,3},{0x1D770,10966,2},{0x1D771,10968,2},{0x1D772,10970,2},{0x1D773,10972,2},
    {0x1D774,10974,2},{0x1D775,10976,2},{0x1D776,10978,2},{0x1D777,10980,2},{0x1D778,10982,2},{0x1D779,10984,2},
    {0x1D77A,10986,2},{0x1D77B,10988,2},{0x1D77C,10990,2},{0x1D77D,10992,2},{0x1D77E,10994,2},{0x1D77F,10996,2},
    {0x1D780,10998,2},{0x1D781,11000,2},{0x1D782,11002,2},{0x1D783,11004,2},{0x1D784,11006,2},{0x1D785,11008,2},
    {0x1D786,11010,2},{0x1D787,11012,2},{0x1D788,11014,2},{0x1D789,11016,3},{0x1D78A,11019,2},{0x1D78B,11021,2},
    {0x1D78C,11023,2},{0x1D78D,11025,2},{0x1D78E,11027,2},{0x1D78F,11029,2},{0x1D790,11031,2},{0x1D791,11033,2},
    {0x1D792,11035,2},{0x1D793,11037,2},{0x1D794,11039,2},{0x1D795,11041,2},{0x1D796,11043,2},{0x1D797,11045,2},
    {0x1D798,11047,2},{0x1D799,11049,2},{0x1D79A,11051,2},{0x1D79B,11053,2},{0x1D79C,11055,2},{0x1D79D,11057,2},
    {0x1D79E,11059,2},{0x1D79F,11061,2},{0x1D7A0,11063,2},{0x1D7A1,11065,2},{0x1D7A2,11067,2},{0x1D7A3,11069,2},
    {0x1D7A4,11071,2},{0x1D7A5,11073,2},{0x1D7A6,11075,2},{0x1D7A7,11077,2},{0x1D7A8,11079,2},{0x1D7A9,11081,3},
    {0x1D7AA,11084,2},{0x1D7AB,11086,2},{0x1D7AC,11088,2},{0x1D7AD,11090,2},{0x1D7AE,11092,2},{0x1D7AF,11094,2},
    {0x1D7B0,11096,2},{0x1D7B1,11098,2},{0x1D7B2,11100,2},{0x1D7B3,11102,2},{0x1D7B4,11104,2},{0x1D7B5,11106,2},
    {0x1D7B6,11108,2},{0x1D7B7,11110,2},{0x1D7B8,11112,2},{0x1D7B9,11114,2},{0x1D7BA,11116,2},{0x1D7BB,11118,2},
    {0x1D7BC,11120,2},{0x1D7BD,11122,2},{0x1D7BE,11124,2},{0x1D7BF,11126,2},{0x1D7C0,11128,2},{0x1D7C1,11130,2},
    {0x1D7C2,11132,2},{0x1D7C3,11134,3},{0x1D7C4,11137,2},{0x1D7C5,11139,2},{0x1D7C6,11141,2},{0x1D7C7,11143,2},
    {0x1D7C8,11145,2},{0x1D7C9,11147,2},{0x1D7CA,11149,2},{0x1D7CB,11151,2},{0x1D7CE,11153,1},{0x1D7CF,11154,1},
    {0x1D7D0,11155,1},{0x1D7D1,11156,1},{0x1D7D2,11157,1},{0x1D7D3,11158,1},{0x1D7D4,11159,1},{0x1D7D5,11160,1},
    {0x1D7D6,11161,1},{0x1D7D7,11162,1},{0x1D7D8,11163,1},{0x1D7D9,11164,1},{0x1D7DA,11165,1},{0x1D7DB,11166,1},
    {0x1D7DC,11167,1},{0x1D7DD,11168,1},{0x1D7DE,11169,1},{0x1D7DF,11170,1},{0x1D7E0,11171,1},{0x1D7E1,11172,1},
    {0x1D7E2,11173,1},{0x1D7E3,11174,1},{0x1D7E4,11175,1},{0x1D7E5,11176,1},{0x1D7E6,11177,1},{0x1D7E7,11178,1},
    {0x1D7E8,11179,1},{0x1D7E9,11180,1},{0x1D7EA,11181,1},{0x1D7EB,11182,1},{0x1D7EC,11183,1},{0x1D7ED,11184,1},
    {0x1D7EE,11185,1},{0x1D7EF,11186,1},{0x1D7F0,11187,1},{0x1D7F1,11188,1},{0x1D7F2,11189,1},{0x1D7F3,11190,1},
    {0x1D7F4,11191,1},{0x1D7F5,11192,1},{0x1D7F6,11193,1},{0x1D7F7,11194,1},{0x1D7F8,11195,1},{0x1D7F9,11196,1},
    {0x1D7FA,11197,1},{0x1D7FB,11198,1},{0x1D7FC,11199,1},{0x1D7FD,11200,1},{0x1D7FE,11201,1},{0x1D7FF,11202,1},
    {0x1EE00,11203,2},{0x1EE01,11205,2},{0x1EE02,11207,2},{0x1EE03,11209,2},{0x1EE05,11211,2},{0x1EE06,11213,2},
    {0x1EE07,11215,2},{0x1EE08,11217,2},{0x1EE09,11219,2},{0x1EE0A,11221,2},{0x1EE0B,11223,2},{0x1EE0C,11225,2},
    {0x1EE0D,11227,2},{0x1EE0E,11229,2},{0x1EE0F,11231,2},{0x1EE10,11233,2},{0x1EE11,11235,2},{0x1EE12,11237,2},
    {0x1EE13,11239,2},{0x1EE14,11241,2},{0x1EE15,11243,2},{0x1EE16,11245,2},{0x1EE17,11247,2},{0x1EE18,11249,2},
    {0x1EE19,11251,2},{0x1EE1A,11253,2},{0x1EE1B,11255,2},{0x1EE1C,11257,2},{0x1EE1D,11259,2},{0x1EE1E,11261,2},
    {0x1EE1F,11263,2},{0x1EE21,11265,2},{0x1EE22,11267,2},{0x1EE24,11269,2},{0x1EE27,11271,2},{0x1EE29,11273,2},
    {0x1EE2A,11275,2},{0x1EE2B,11277,2},{0x1EE2C,11279,2},{0x1EE2D,11281,2},{0x1EE2E,11283,2},{0x1EE2F,11285,2},
    {0x1EE30,11287,2},{0x1EE31,11289,2},{0x1EE32,11291,2},{0x1EE34,11293,2},{0x1EE35,11295,2},{0x1EE36,11297,2},
    {0x1EE37,11299,2},{0x1EE39,11301,2},{0x1EE3B,11303,2},{0x1EE42,11305,2},{0x1EE47,11307,2},{0x1EE49,11309,2},
    {0x1EE4B,11311,2},{0x1EE4D,11313,2},{0x1EE4E,11315,2},{0x1EE4F,11317,2},{0x1EE51,11319,2},{0x1EE52,11321,2},
    {0x1EE54,11323,2},{0x1EE57,11325,2},{0x1EE59,11327,2},{0x1EE5B,11329,2},{0x1EE5D,11331,2},{0x1EE5F,11333,2},
    {0x1EE61,11335,2},{0x1EE62,11337,2},{0x1EE64,11339,2},{0x1EE67,11341,2},{0x1EE68,11343,2},{0x1EE69,11345,2},
    {0x1EE6A,11347,2},{0x1EE6C,11349,2},{0x1EE6D,11351,2},{0x1EE6E,11353,2},{0x1EE6F,11355,2},{0x1EE70,11357,2},
    {0x1EE71,11359,2},{0x1EE72,11361,2},{0x1EE74,11363,2},{0x1EE75,11365,2},{0x1EE76,11367,2},{0x1EE77,11369,2},
    {0x1EE79,11371,2},{0x1EE7A,11373,2},{0x1EE7B,11375,2},{0x1EE7C,11377,2},{0x1EE7E,11379,2},{0x1EE80,11381,2},
    {0x1EE81,11383,2},{0x1EE82,11385,2},{0x1EE83,11387,2},{0x1EE84,11389,2},{0x1EE85,11391,2},{0x1EE86,11393,2},
    {0x1EE87,11395,2},{0x1EE88,11397,2},{0x1EE89,11399,2},{0x1EE8B,11401,2},{0x1EE8C,11403,2},{0x1EE8D,11405,2},
    {0x1EE8E,11407,2},{0x1EE8F,11409,2},{0x1EE90,11411,2},{0x1EE91,11413,2},{0x1EE92,11415,2},{0x1EE93,11417,2},
    {0x1EE94,11419,2},{0x1EE95,11421,2},{0x1EE96,11423,2},{0x1EE97,11425,2},{0x1EE98,11427,2},{0x1EE99,11429,2},
    {0x1EE9A,11431,2},{0x1EE9B,11433,2},{0x1EEA1,11435,2},{0x1EEA2,11437,2},{0x1EEA3,11439,2},{0x1EEA5,11441,2},
    {0x1EEA6,11443,2},{0x1EEA7,11445,2},{0x1EEA8,11447,2},{0x1EEA9,11449,2},{0x1EEAB,11451,2},{0x1EEAC,11453,2},
    {0x1EEAD,11455,2},{0x1EEAE,11457,2},{0x1EEAF,11459,2},{0x1EEB0,11461,2},{0x1EEB1,11463,2},{0x1EEB2,11465,2},
    {0x1EEB3,11467,2},{0x1EEB4,11469,2},{0x1EEB5,11471,2},{0x1EEB6,11473,2},{0x1EEB7,11475,2},{0x1EEB8,11477,2},
    {0x1EEB9,11479,2},{0x1EEBA,11481,2},{0x1EEBB,11483,2},{0x1F100,11485,2},{0x1F101,11487,2},{0x1F102,11489,2},
    {0x1F103,11491,2},{0x1F104,11493,2},{0x1F105,11495,2},{0x1F106,11497,2},{0x1F107,11499,2},{0x1F108,11501,2},
    {0x1F109,11503,2},{0x1F10A,11505,2},{0x1F110,11507,3},{0x1F111,11510,3},{0x1F112,11513,3},{0x1F113,11516,3},
    {0x1F114,11519,3},{0x1F115,11522,3},{0x1F116,11525,3},{0x1F117,11528,3},{0x1F118,11531,3},{0x1F119,11534,3},
    {0x1F11A,11537,3},{0x1F11B,11540,3},{0x1F11C,11543,3},{0x1F11D,11546,3},{0x1F11E,11549,3},{0x1F11F,11552,3},
    {0x1F120,11555,3},{0x1F121,11558,3},{0x1F122,11561,3},{0x1F123,11564,3},{0x1F124,11567,3},{0x1F125,11570,3},
    {0x1F126,11573,3},{0x1F127,11576,3},{0x1F128,11579,3},{0x1F129,11582,3},{0x1F12A,11585,7},{0x1F12B,11592,1},
    {0x1F12C,11593,1},{0x1F12D,11594,2},{0x1F12E,11596,2},{0x1F130,11598,1},{0x1F131,11599,1},{0x1F132,11600,1},
    {0x1F133,11601,1},{0x1F134,11602,1},{0x1F135,11603,1},{0x1F136,11604,1},{0x1F137,11605,1},{0x1F138,11606,1},
    {0x1F139,11607,1},{0x1F13A,11608,1},{0x1F13B,11609,1},{0x1F13C,11610,1},{0x1F13D,11611,1},{0x1F13E,11612,1},
    {0x1F13F,11613,1},{0x1F140,11614,1},{0x1F141,11615,1},{0x1F142,11616,1},{0x1F143,11617,1},{0x1F144,11618,1},
    {0x1F145,11619,1},{0x1F146,11620,1},{0x1F147,11621,1},{0x1F148,11622,1},{0x1F149,11623,1},{0x1F14A,11624,2},
    {0x1F14B,11626,2},{0x1F14C,11628,2},{0x1F14D,11630,2},{0x1F14E,11632,3},{0x1F14F,11635,2},{0x1F16A,11637,2},
    {0x1F16B,11639,2},{0x1F16C,11641,2},{0x1F190,11643,2},{0x1F200,11645,6},{0x1F201,11651,6},{0x1F202,11657,3},
    {0x1F210,11660,3},{0x1F211,11663,3},{0x1F212,11666,3},{0x1F213,11669,3},{0x1F214,11672,3},{0x1F215,11675,3},
    {0x1F216,11678,3},{0x1F217,11681,3},{0x1F218,11684,3},{0x1F219,11687,3},{0x1F21A,11690,3},{0x1F21B,11693,3},
    {0x1F21C,11696,3},{0x1F21D,11699,3},{0x1F21E,11702,3},{0x1F21F,11705,3},{0x1F220,11708,3},{0x1F221,11711,3},
    {0x1F222,11714,3},{0x1F223,11717,3},{0x1F224,11720,3},{0x1F225,11723,3},{0x1F226,11726,3},{0x1F227,11729,3},
    {0x1F228,11732,3},{0x1F229,11735,3},{0x1F22A,11738,3},{0x1F22B,11741,3},{0x1F22C,11744,3},{0x1F22D,11747,3},
    {0x1F22E,11750,3},{0x1F22F,11753,3},{0x1F230,11756,3},{0x1F231,11759,3},{0x1F232,11762,3},{0x1F233,11765,3},
    {0x1F234,11768,3},{0x1F235,11771,3},{0x1F236,11774,3},{0x1F237,11777,3},{0x1F238,11780,3},{0x1F239,11783,3},
    {0x1F23A,11786,3},{0x1F23B,11789,3},{0x1F240,11792,9},{0x1F241,11801,9},{0x1F242,11810,9},{0x1F243,11819,9},
    {0x1F244,11828,9},{0x1F245,11837,9},{0x1F246,11846,9},{0x1F247,11855,9},{0x1F248,11864,9},{0x1F250,11873,3},
    {0x1F251,11876,3},{0x1FBF0,11879,1},{0x1FBF1,11880,1},{0x1FBF2,11881,1},{0x1FBF3,11882,1},{0x1FBF4,11883,1},
    {0x1FBF5,11884,1},{0x1FBF6,11885,1},{0x1FBF7,11886,1},{0x1FBF8,11887,1},{0x1FBF9,11888,1},{0x2F800,11889,3},
    {0x2F801,11892,3},{0x2F802,11895,3},{0x2F803,11898,4},{0x2F804,11902,3},{0x2F805,11905,3},{0x2F806,11908,3},
    {0x2F807,11911,3},{0x2F808,11914,3},{0x2F809,11917,3},{0x2F80A,11920,3},{0x2F80B,11923,3},{0x2F80C,11926,3},
    {0x2F80D,11929,4},{0x2F80E,11933,3},{0x2F80F,11936,3},{0x2F810,11939,3},{0x2F811,11942,3},{0x2F812,11945,4},
    {0x2F813,11949,3},{0x2F814,11952,3},{0x2F815,11955,3},{0x2F816,11958,4},{0x2F817,11962,3},{0x2F818,11965,3},
    {0x2F819,11968,3},{0x2F81A,11971,3},{0x2F81B,11974,3},{0x2F81C,11977,4},{0x2F81D,11981,3},{0x2F81E,11984,3},
    {0x2F81F,11987,3},{0x2F820,11990,3},{0x2F821,11993,3},{0x2F822,11996,3},{0x2F823,11999,3},{0x2F824,12002,3},
    {0x2F825,12005,3},{0x2F826,12008,3},{0x2F827,12011,3},{0x2F828,12014,3},{0x2F829,12017,3},{0x2F82A,12020,3},
    {0x2F82B,12023,3},{0x2F82C,12026,3},{0x2F82D,12029,3},{0x2F82E,12032,3},{0x2F82F,12035,3},{0x2F830,12038,3},
    {0x2F831,12041,3},{0x2F832,12044,3},{0x2F833,12047,3},{0x2F834,12050,4},{0x2F835,12054,3},{0x2F836,12057,3},
    {0x2F837,12060,3},{0x2F838,12063,4},{0x2F839,12067,3},{0x2F83A,12070,3},{0x2F83B,12073,3},{0x2F83C,12076,3},
    {0x2F83D,12079,3},{0x2F83E,12082,3},{0x2F83F,12085,3},{0x2F840,12088,3},{0x2F841,12091,3},{0x2F842,12094,3},
    {0x2F843,12097,3},{0x2F844,12100,3},{0x2F845,12103,3},{0x2F846,12106,3},{0x2F847,12109,3},{0x2F848,12112,3},
    {0x2F849,12115,3},{0x2F84A,12118,3},{0x2F84B,12121,3},{0x2F84C,12124,3},{0x2F84D,12127,3},{0x2F84E,12130,3},
    {0x2F84F,12133,3},{0x2F850,12136,3},{0x2F851,12139,3},{0x2F852,12142,3},{0x2F853,12145,3},{0x2F854,12148,3},
    {0x2F855,12151,3},{0x2F856,12154,3},{0x2F857,12157,3},{0x2F858,12160,3},{0x2F859,12163,4},{0x2F85A,12167,3},
    {0x2F85B,12170,3},{0x2F85C,12173,3},{0x2F85D,12176,3},{0x2F85E,12179,3},{0x2F85F,12182,3},{0x2F860,12185,4},
    {0x2F861,12189,4},{0x2F862,12193,3},{0x2F863,12196,3},{0x2F864,12199,3},{0x2F865,12202,3},{0x2F866,12205,3},
    {0x2F867,12208,3},{0x2F868,12211,3},{0x2F869,12214,3},{0x2F86A,12217,3},{0x2F86B,12220,3},{0x2F86C,12223,4},
    {0x2F86D,12227,3},{0x2F86E,12230,3},{0x2F86F,12233,3},{0x2F870,12236,3},{0x2F871,12239,4},{0x2F872,12243,3},
    {0x2F873,12246,3},{0x2F874,12249,3},{0x2F875,12252,3},{0x2F876,12255,3},{0x2F877,12258,3},{0x2F878,12261,3},
    {0x2F879,12264,3},{0x2F87A,12267,3},{0x2F87B,12270,4},{0x2F87C,12274,3},{0x2F87D,12277,4},{0x2F87E,12281,3},
    {0x2F87F,12284,3},{0x2F880,12287,3},{0x2F881,12290,3},{0x2F882,12293,3},{0x2F883,12296,3},{0x2F884,12299,3},
    {0x2F885,12302,3},{0x2F886,12305,3},{0x2F887,12308,3},{0x2F888,12311,3},{0x2F889,12314,4},{0x2F88A,12318,3},
    {0x2F88B,12321,3},{0x2F88C,12324,3},{0x2F88D,12327,3},{0x2F88E,12330,3},{0x2F88F,12333,4},{0x2F890,12337,3},
    {0x2F891,12340,4},{0x2F892,12344,4},{0x2F893,12348,3},{0x2F894,12351,3},{0x2F895,12354,3},{0x2F896,12357,3},
    {0x2F897,12360,4},{0x2F898,12364,4},{0x2F899,12368,3},{0x2F89A,12371,3},{0x2F89B,12374,3},{0x2F89C,12377,3},
    {0x2F89D,12380,3},{0x2F89E,12383,3},{0x2F89F,12386,3},{0x2F8A0,12389,3},{0x2F8A1,12392,3},{0x2F8A2,12395,3},
    {0x2F8A3,12398,3},{0x2F8A4,12401,4},{0x2F8A5,12405,3},{0x2F8A6,12408,3},{0x2F8A7,12411,3},{0x2F8A8,12414,3},
    {0x2F8A9,12417,3},{0x2F8AA,12420,3},{0x2F8AB,12423,3},{0x2F8AC,12426,3},{0x2F8AD,12429,3},{0x2F8AE,12432,3},
    {0x2F8AF,12435,3},{0x2F8B0,12438,3},{0x2F8B1,12441,3},{0x2F8B2,12444,3},{0x2F8B3,12447,3},{0x2F8B4,12450,3},
    {0x2F8B5,12453,3},{0x2F8B6,12456,3},{0x2F8B7,12459,3},{0x2F8B8,12462,4},{0x2F8B9,12466,3},{0x2F8BA,12469,3},
    {0x2F8BB,12472,3},{0x2F8BC,12475,3},{0x2F8BD,12478,3},{0x2F8BE,12481,4},{0x2F8BF,12485,3},{0x2F8C0,12488,3},
    {0x2F8C1,12491,3},{0x2F8C2,12494,3},{0x2F8C3,12497,3},{0x2F8C4,12500,3},{0x2F8C5,12503,3},{0x2F8C6,12506,3},
    {0x2F8C7,12509,3},{0x2F8C8,12512,3},{0x2F8C9,12515,3},{0x2F8CA,12518,4},{0x2F8CB,12522,3},{0x2F8CC,12525,3},
    {0x2F8CD,12528,3},{0x2F8CE,12531,3},{0x2F8CF,12534,3},{0x2F8D0,12537,3},{0x2F8D1,12540,3},{0x2F8D2,12543,3},
    {0x2F8D3,12546,3},{0x2F8D4,12549,3},{0x2F8D5,12552,3},{0x2F8D6,12555,3},{0x2F8D7,12558,3},{0x2F8D8,12561,3},
    {0x2F8D9,12564,3},{0x2F8DA,12567,3},{0x2F8DB,12570,3},{0x2F8DC,12573,3},{0x2F8DD,12576,4},{0x2F8DE,12580,3},
    {0x2F8DF,12583,3},{0x2F8E0,12586,3},{0x2F8E1,12589,3},{0x2F8E2,12592,3},{0x2F8E3,12595,4},{0x2F8E4,12599,3},
    {0x2F8E5,12602,3},{0x2F8E6,12605,3},{0x2F8E7,12608,3},{0x2F8E8,12611,3},{0x2F8E9,12614,3},{0x2F8EA,12617,3},
    {0x2F8EB,12620,3},{0x2F8EC,12623,4},{0x2F8ED,12627,3},{0x2F8EE,12630,3},{0x2F8EF,12633,3},{0x2F8F0,12636,4},
    {0x2F8F1,12640,3},{0x2F8F2,12643,3},{0x2F8F3,12646,3},{0x2F8F4,12649,3},{0x2F8F5,12652,3},{0x2F8F6,12655,3},
    {0x2F8F7,12658,4},{0x2F8F8,12662,4},{0x2F8F9,12666,4},{0x2F8FA,12670,3},{0x2F8FB,12673,4},{0x2F8FC,12677,3},
    {0x2F8FD,12680,3},{0x2F8FE,12683,3},{0x2F8FF,12686,3},{0x2F900,12689,3},{0x2F901,12692,3},{0x2F902,12695,3},
    {0x2F903,12698,3},{0x2F904,12701,3},{0x2F905,12704,3},{0x2F906,12707,4},{0x2F907,12711,3},{0x2F908,12714,3},
    {0x2F909,12717,3},{0x2F90A,12720,3},{0x2F90B,12723,3},{0x2F90C,12726,3},{0x2F90D,12729,4},{0x2F90E,12733,3},
    {0x2F90F,12736,3},{0x2F910,12739,4},{0x2F911,12743,4},{0x2F912,12747,3},{0x2F913,12750,3},{0x2F914,12753,3},
    {0x2F915,12756,3},{0x2F916,12759,3},{0x2F917,12762,3},{0x2F918,12765,3},{0x2F919,12768,3},{0x2F91A,12771,3},
    {0x2F91B,12774,4},{0x2F91C,12778,3},{0x2F91D,12781,4},{0x2F91E,12785,3},{0x2F91F,12788,4},{0x2F920,12792,3},
    {0x2F921,12795,3},{0x2F922,12798,3},{0x2F923,12801,4},{0x2F924,12805,3},{0x2F925,12808,3},{0x2F926,12811,4},
    {0x2F927,12815,4},{0x2F928,12819,3},{0x2F929,12822,3},{0x2F92A,12825,3},{0x2F92B,12828,3},{0x2F92C,12831,3},
    {0x2F92D,12834,3},{0x2F92E,12837,3},{0x2F92F,12840,3},{0x2F930,12843,3},{0x2F931,12846,3},{0x2F932,12849,3},
    {0x2F933,12852,3},{0x2F934,12855,3},{0x2F935,12858,4},{0x2F936,12862,3},{0x2F937,12865,4},{0x2F938,12869,3},
    {0x2F939,12872,4},{0x2F93A,12876,3},{0x2F93B,12879,4},{0x2F93C,12883,4},{0x2F93D,12887,4},{0x2F93E,12891,3},
    {0x2F93F,12894,3},{0x2F940,12897,3},{0x2F941,12900,4},{0x2F942,12904,4},{0x2F943,12908,4},{0x2F944,12912,4},
    {0x2F945,12916,3},{0x2F946,12919,3},{0x2F947,12922,3},{0x2F948,12925,3},{0x2F949,12928,3},{0x2F94A,12931,3},
    {0x2F94B,12934,3},{0x2F94C,12937,3},{0x2F94D,12940,4},{0x2F94E,12944,3},{0x2F94F,12947,3},{0x2F950,12950,3},
    {0x2F951,12953,3},{0x2F952,12956,4},{0x2F953,12960,3},{0x2F954,12963,4},{0x2F955,12967,4},{0x2F956,12971,3},
    {0x2F957,12974,3},{0x2F958,12977,3},{0x2F959,12980,3},{0x2F95A,12983,3},{0x2F95B,12986,3},{0x2F95C,12989,4},
    {0x2F95D,12993,4},{0x2F95E,12997,4},{0x2F95F,13001,3},{0x2F960,13004,3},{0x2F961,13007,4},{0x2F962,13011,3},
    {0x2F963,13014,3},{0x2F964,13017,3},{0x2F965,13020,4},{0x2F966,13024,3},{0x2F967,13027,3},{0x2F968,13030,3},
    {0x2F969,13033,3},{0x2F96A,13036,3},{0x2F96B,13039,4},{0x2F96C,13043,3},{0x2F96D,13046,3},{0x2F96E,13049,3},
    {0x2F96F,13052,3},{0x2F970,13055,3},{0x2F971,13058,3},{0x2F972,13061,4},{0x2F973,13065,4},{0x2F974,13069,3},
    {0x2F975,13072,4},{0x2F976,13076,3},{0x2F977,13079,4},{0x2F978,13083,3},{0x2F979,13086,3},{0x2F97A,13089,3},
    {0x2F97B,13092,4},{0x2F97C,13096,4},{0x2F97D,13100,3},{0x2F97E,13103,4},{0x2F97F,13107,3},{0x2F980,13110,4},
    {0x2F981,13114,3},{0x2F982,13117,3},{0x2F983,13120,3},{0x2F984,13123,3},{0x2F985,13126,3},{0x2F986,13129,3},
    {0x2F987,13132,4},{0x2F988,13136,4},{0x2F989,13140,4},{0x2F98A,13144,4},{0x2F98B,13148,3},{0x2F98C,13151,3},
    {0x2F98D,13154,3},{0x2F98E,13157,3},{0x2F98F,13160,3},{0x2F990,13163,3},{0x2F991,13166,3},{0x2F992,13169,3},
    {0x2F993,13172,3},{0x2F994,13175,3},{0x2F995,13178,3},{0x2F996,13181,3},{0x2F997,13184,4},{0x2F998,13188,3},
    {0x2F999,13191,3},{0x2F99A,13194,3},{0x2F99B,13197,3},{0x2F99C,13200,3},{0x2F99D,13203,3},{0x2F99E,13206,3},
    {0x2F99F,13209,3},{0x2F9A0,13212,3},{0x2F9A1,13215,3},{0x2F9A2,13218,3},{0x2F9A3,13221,3},{0x2F9A4,13224,4},
    {0x2F9A5,13228,4},{0x2F9A6,13232,4},{0x2F9A7,13236,3},{0x2F9A8,13239,3},{0x2F9A9,13242,3},{0x2F9AA,13245,3},
    {0x2F9AB,13248,4},{0x2F9AC,13252,3},{0x2F9AD,13255,4},{0x2F9AE,13259,3},{0x2F9AF,13262,3},{0x2F9B0,13265,4},
    {0x2F9B1,13269,4},{0x2F9B2,13273,3},{0x2F9B3,13276,3},{0x2F9B4,13279,3},{0x2F9B5,13282,3},{0x2F9B6,13285,3},
    {0x2F9B7,13288,3},{0x2F9B8,13291,3},{0x2F9B9,13294,3},{0x2F9BA,13297,3},{0x2F9BB,13300,3},{0x2F9BC,13303,3},
    {0x2F9BD,13306,3},{0x2F9BE,13309,3},{0x2F9BF,13312,3},{0x2F9C0,13315,3},{0x2F9C1,13318,3},{0x2F9C2,13321,3},
    {0x2F9C3,13324,3},{0x2F9C4,13327,3},{0x2F9C5,13330,4},{0x2F9C6,13334,3},{0x2F9C7,13337,3},{0x2F9C8,13340,3},
    {0x2F9C9,13343,3},{0x2F9CA,13346,3},{0x2F9CB,13349,4},{0x2F9CC,13353,4},{0x2F9CD,13357,3},{0x2F9CE,13360,3},
    {0x2F9CF,13363,3},{0x2F9D0,13366,3},{0x2F9D1,13369,3},{0x2F9D2,13372,3},{0x2F9D3,13375,4},{0x2F9D4,13379,3},
    {0x2F9D5,13382,3},{0x2F9D6,13385,3},{0x2F9D7,13388,3},{0x2F9D8,13391,4},{0x2F9D9,13395,4},{0x2F9DA,13399,3},
    {0x2F9DB,13402,3},{0x2F9DC,13405,3},{0x2F9DD,13408,4},{0x2F9DE,13412,3},{0x2F9DF,13415,3},{0x2F9E0,13418,4},
    {0x2F9E1,13422,4},{0x2F9E2,13426,3},{0x2F9E3,13429,3},{0x2F9E4,13432,3},{0x2F9E5,13435,4},{0x2F9E6,13439,3},
    {0x2F9E7,13442,3},{0x2F9E8,13445,3},{0x2F9E9,13448,3},{0x2F9EA,13451,3},{0x2F9EB,13454,3},{0x2F9EC,13457,3},
    {0x2F9ED,13460,4},{0x2F9EE,13464,3},{0x2F9EF,13467,3},{0x2F9F0,13470,3},{0x2F9F1,13473,4},{0x2F9F2,13477,3},
    {0x2F9F3,13480,3},{0x2F9F4,13483,3},{0x2F9F5,13486,3},{0x2F9F6,13489,4},{0x2F9F7,13493,4},{0x2F9F8,13497,3},
    {0x2F9F9,13500,3},{0x2F9FA,13503,3},{0x2F9FB,13506,4},{0x2F9FC,13510,3},{0x2F9FD,13513,4},{0x2F9FE,13517,3},
    {0x2F9FF,13520,3},{0x2FA00,13523,3},{0x2FA01,13526,4},{0x2FA02,13530,3},{0x2FA03,13533,3},{0x2FA04,13536,3},
    {0x2FA05,13539,3},{0x2FA06,13542,3},{0x2FA07,13545,3},{0x2FA08,13548,3},{0x2FA09,13551,4},{0x2FA0A,13555,3},
    {0x2FA0B,13558,3},{0x2FA0C,13561,3},{0x2FA0D,13564,3},{0x2FA0E,13567,3},{0x2FA0F,13570,3},{0x2FA10,13573,4},
    {0x2FA11,13577,3},{0x2FA12,13580,4},{0x2FA13,13584,4},{0x2FA14,13588,4},{0x2FA15,13592,3},{0x2FA16,13595,3},
    {0x2FA17,13598,3},{0x2FA18,13601,3},{0x2FA19,13604,3},{0x2FA1A,13607,3},{0x2FA1B,13610,3},{0x2FA1C,13613,3},
    {0x2FA1D,13616,4},
};
const std::size_t kNfkcMapSize = sizeof(kNfkcMap) / sizeof(kNfkcMap[0]);

const char kNfkcPool[] =
    "\x20\x20\xcc\x88\x61\x20\xcc\x84\x32\x33\x20\xcc\x81\xce\xbc\x20\xcc\xa7"
    "\x31\x6f\x31\xe2\x81\x84\x34\x31\xe2\x81\x84\x32\x33\xe2\x81\x84\x34\x49"
    "\x4a\x69\x6a\x4c\xc2\xb7\x6c\xc2\xb7\xca\xbc\x6e\x73\x44\xc5\xbd\x44\xc5"
    "\xbe\x64\xc5\xbe\x4c\x4a\x4c\x6a\x6c\x6a\x4e\x4a\x4e\x6a\x6e\x6a\x44\x5a"
    "\x44\x7a\x64\x7a\x68\xc9\xa6\x6a\x72\xc9\xb9\xc9\xbb\xca\x81\x77\x79\x20"
    "\xcc\x86\x20\xcc\x87\x20\xcc\x8a\x20\xcc\xa8\x20\xcc\x83\x20\xcc\x8b\xc9"
    "\xa3\x6c\x73\x78\xca\x95\xcc\x80\xcc\x81\xcc\x93\xcc\x88\xcc\x81\xca\xb9"
    "\x20\xcd\x85\x3b\x20\xcc\x81\x20\xcc\x88\xcc\x81\xc2\xb7\xce\xb2\xce\xb8"
    "\xce\xa5\xce\x8e\xce\xab\xcf\x86\xcf\x80\xce\xba\xcf\x81\xcf\x82\xce\x98"
    "\xce\xb5\xce\xa3\xd5\xa5\xd6\x82\xd8\xa7\xd9\xb4\xd9\x88\xd9\xb4\xdb\x87"
    "\xd9\xb4\xd9\x8a\xd9\xb4\xe0\xa4\x95\xe0\xa4\xbc\xe0\xa4\x96\xe0\xa4\xbc"
    "\xe0\xa4\x97\xe0\xa4\xbc\xe0\xa4\x9c\xe0\xa4\xbc\xe0\xa4\xa1\xe0\xa4\xbc"
    "\xe0\xa4\xa2\xe0\xa4\xbc\xe0\xa4\xab\xe0\xa4\xbc\xe0\xa4\xaf\xe0\xa4\xbc"
    "\xe0\xa6\xa1\xe0\xa6\xbc\xe0\xa6\xa2\xe0\xa6\xbc\xe0\xa6\xaf\xe0\xa6\xbc"
    "\xe0\xa8\xb2\xe0\xa8\xbc\xe0\xa8\xb8\xe0\xa8\xbc\xe0\xa8\x96\xe0\xa8\xbc"
    "\xe0\xa8\x97\xe0\xa8\xbc\xe0\xa8\x9c\xe0\xa8\xbc\xe0\xa8\xab\xe0\xa8\xbc"
    "\xe0\xac\xa1\xe0\xac\xbc\xe0\xac\xa2\xe0\xac\xbc\xe0\xb9\x8d\xe0\xb8\xb2"
    "\xe0\xbb\x8d\xe0\xba\xb2\xe0\xba\xab\xe0\xba\x99\xe0\xba\xab\xe0\xba\xa1"
    "\xe0\xbc\x8b\xe0\xbd\x82\xe0\xbe\xb7\xe0\xbd\x8c\xe0\xbe\xb7\xe0\xbd\x91"
    "\xe0\xbe\xb7\xe0\xbd\x96\xe0\xbe\xb7\xe0\xbd\x9b\xe0\xbe\xb7\xe0\xbd\x80"
    "\xe0\xbe\xb5\xe0\xbd\xb1\xe0\xbd\xb2\xe0\xbd\xb1\xe0\xbd\xb4\xe0\xbe\xb2"
    "\xe0\xbe\x80\xe0\xbe\xb2\xe0\xbd\xb1\xe0\xbe\x80\xe0\xbe\xb3\xe0\xbe\x80"
    "\xe0\xbe\xb3\xe0\xbd\xb1\xe0\xbe\x80\xe0\xbd\xb1\xe0\xbe\x80\xe0\xbe\x92"
    "\xe0\xbe\xb7\xe0\xbe\x9c\xe0\xbe\xb7\xe0\xbe\xa1\xe0\xbe\xb7\xe0\xbe\xa6"
    "\xe0\xbe\xb7\xe0\xbe\xab\xe0\xbe\xb7\xe0\xbe\x90\xe0\xbe\xb5\xe1\x83\x9c"
    "\x41\xc3\x86\x42\x44\x45\xc6\x8e\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\xc8"
    "\xa2\x50\x52\x54\x55\x57\x61\xc9\x90\xc9\x91\xe1\xb4\x82\x62\x64\x65\xc9"
    "\x99\xc9\x9b\xc9\x9c\x67\x6b\x6d\xc5\x8b\x6f\xc9\x94\xe1\xb4\x96\xe1\xb4"
    "\x97\x70\x74\x75\xe1\xb4\x9d\xc9\xaf\x76\xe1\xb4\xa5\xce\xb2\xce\xb3\xce"
    "\xb4\xcf\x86\xcf\x87\x69\x72\x75\x76\xce\xb2\xce\xb3\xcf\x81\xcf\x86\xcf"
    "\x87\xd0\xbd\xc9\x92\x63\xc9\x95\xc3\xb0\xc9\x9c\x66\xc9\x9f\xc9\xa1\xc9"
    "\xa5\xc9\xa8\xc9\xa9\xc9\xaa\xe1\xb5\xbb\xca\x9d\xc9\xad\xe1\xb6\x85\xca"
    "\x9f\xc9\xb1\xc9\xb0\xc9\xb2\xc9\xb3\xc9\xb4\xc9\xb5\xc9\xb8\xca\x82\xca"
    "\x83\xc6\xab\xca\x89\xca\x8a\xe1\xb4\x9c\xca\x8b\xca\x8c\x7a\xca\x90\xca"
    "\x91\xca\x92\xce\xb8\x61\xca\xbe\xe1\xb9\xa1\xce\xac\xce\xad\xce\xae\xce"
    "\xaf\xcf\x8c\xcf\x8d\xcf\x8e\xce\x86\x20\xcc\x93\xce\xb9\x20\xcc\x93\x20"
    "\xcd\x82\x20\xcc\x88\xcd\x82\xce\x88\xce\x89\x20\xcc\x93\xcc\x80\x20\xcc"
    "\x93\xcc\x81\x20\xcc\x93\xcd\x82\xce\x90\xce\x8a\x20\xcc\x94\xcc\x80\x20"
    "\xcc\x94\xcc\x81\x20\xcc\x94\xcd\x82\xce\xb0\xce\x8e\x20\xcc\x88\xcc\x80"
    "\x20\xcc\x88\xcc\x81\x60\xce\x8c\xce\x8f\x20\xcc\x81\x20\xcc\x94\x20\x20"
    "\x20\x20\x20\x20\x20\x20\x20\x20\x20\xe2\x80\x90\x20\xcc\xb3\x2e\x2e\x2e"
    "\x2e\x2e\x2e\x20\xe2\x80\xb2\xe2\x80\xb2\xe2\x80\xb2\xe2\x80\xb2\xe2\x80"
    "\xb2\xe2\x80\xb5\xe2\x80\xb5\xe2\x80\xb5\xe2\x80\xb5\xe2\x80\xb5\x21\x21"
    "\x20\xcc\x85\x3f\x3f\x3f\x21\x21\x3f\xe2\x80\xb2\xe2\x80\xb2\xe2\x80\xb2"
    "\xe2\x80\xb2\x20\x30\x69\x34\x35\x36\x37\x38\x39\x2b\xe2\x88\x92\x3d\x28"
    "\x29\x6e\x30\x31\x32\x33\x34\x35\x36\x37\x38\x39\x2b\xe2\x88\x92\x3d\x28"
    "\x29\x61\x65\x6f\x78\xc9\x99\x68\x6b\x6c\x6d\x6e\x70\x73\x74\x52\x73\x61"
    "\x2f\x63\x61\x2f\x73\x43\xc2\xb0\x43\x63\x2f\x6f\x63\x2f\x75\xc6\x90\xc2"
    "\xb0\x46\x67\x48\x48\x48\x68\xc4\xa7\x49\x49\x4c\x6c\x4e\x4e\x6f\x50\x51"
    "\x52\x52\x52\x53\x4d\x54\x45\x4c\x54\x4d\x5a\xce\xa9\x5a\x4b\xc3\x85\x42"
    "\x43\x65\x45\x46\x4d\x6f\xd7\x90\xd7\x91\xd7\x92\xd7\x93\x69\x46\x41\x58"
    "\xcf\x80\xce\xb3\xce\x93\xce\xa0\xe2\x88\x91\x44\x64\x65\x69\x6a\x31\xe2"
    "\x81\x84\x37\x31\xe2\x81\x84\x39\x31\xe2\x81\x84\x31\x30\x31\xe2\x81\x84"
    "\x33\x32\xe2\x81\x84\x33\x31\xe2\x81\x84\x35\x32\xe2\x81\x84\x35\x33\xe2"
    "\x81\x84\x35\x34\xe2\x81\x84\x35\x31\xe2\x81\x84\x36\x35\xe2\x81\x84\x36"
    "\x31\xe2\x81\x84\x38\x33\xe2\x81\x84\x38\x35\xe2\x81\x84\x38\x37\xe2\x81"
    "\x84\x38\x31\xe2\x81\x84\x49\x49\x49\x49\x49\x49\x49\x56\x56\x56\x49\x56"
    "\x49\x49\x56\x49\x49\x49\x49\x58\x58\x58\x49\x58\x49\x49\x4c\x43\x44\x4d"
    "\x69\x69\x69\x69\x69\x69\x69\x76\x76\x76\x69\x76\x69\x69\x76\x69\x69\x69"
    "\x69\x78\x78\x78\x69\x78\x69\x69\x6c\x63\x64\x6d\x30\xe2\x81\x84\x33\xe2"
    "\x88\xab\xe2\x88\xab\xe2\x88\xab\xe2\x88\xab\xe2\x88\xab\xe2\x88\xae\xe2"
    "\x88\xae\xe2\x88\xae\xe2\x88\xae\xe2\x88\xae\xe3\x80\x88\xe3\x80\x89\x31"
    "\x32\x33\x34\x35\x36\x37\x38\x39\x31\x30\x31\x31\x31\x32\x31\x33\x31\x34"
    "\x31\x35\x31\x36\x31\x37\x31\x38\x31\x39\x32\x30\x28\x31\x29\x28\x32\x29"
    "\x28\x33\x29\x28\x34\x29\x28\x35\x29\x28\x36\x29\x28\x37\x29\x28\x38\x29"
    "\x28\x39\x29\x28\x31\x30\x29\x28\x31\x31\x29\x28\x31\x32\x29\x28\x31\x33"
    "\x29\x28\x31\x34\x29\x28\x31\x35\x29\x28\x31\x36\x29\x28\x31\x37\x29\x28"
    "\x31\x38\x29\x28\x31\x39\x29\x28\x32\x30\x29\x31\x2e\x32\x2e\x33\x2e\x34"
    "\x2e\x35\x2e\x36\x2e\x37\x2e\x38\x2e\x39\x2e\x31\x30\x2e\x31\x31\x2e\x31"
    "\x32\x2e\x31\x33\x2e\x31\x34\x2e\x31\x35\x2e\x31\x36\x2e\x31\x37\x2e\x31"
    "\x38\x2e\x31\x39\x2e\x32\x30\x2e\x28\x61\x29\x28\x62\x29\x28\x63\x29\x28"
    "\x64\x29\x28\x65\x29\x28\x66\x29\x28\x67\x29\x28\x68\x29\x28\x69\x29\x28"
    "\x6a\x29\x28\x6b\x29\x28\x6c\x29\x28\x6d\x29\x28\x6e\x29\x28\x6f\x29\x28"
    "\x70\x29\x28\x71\x29\x28\x72\x29\x28\x73\x29\x28\x74\x29\x28\x75\x29\x28"
    "\x76\x29\x28\x77\x29\x28\x78\x29\x28\x79\x29\x28\x7a\x29\x41\x42\x43\x44"
    "\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55\x56"
    "\x57\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d\x6e"
    "\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x30\xe2\x88\xab\xe2\x88"
    "\xab\xe2\x88\xab\xe2\x88\xab\x3a\x3a\x3d\x3d\x3d\x3d\x3d\x3d\xe2\xab\x9d"
    "\xcc\xb8\x6a\x56\xe2\xb5\xa1\xe6\xaf\x8d\xe9\xbe\x9f\xe4\xb8\x80\xe4\xb8"
    "\xa8\xe4\xb8\xb6\xe4\xb8\xbf\xe4\xb9\x99\xe4\xba\x85\xe4\xba\x8c\xe4\xba"
    "\xa0\xe4\xba\xba\xe5\x84\xbf\xe5\x85\xa5\xe5\x85\xab\xe5\x86\x82\xe5\x86"
    "\x96\xe5\x86\xab\xe5\x87\xa0\xe5\x87\xb5\xe5\x88\x80\xe5\x8a\x9b\xe5\x8b"
    "\xb9\xe5\x8c\x95\xe5\x8c\x9a\xe5\x8c\xb8\xe5\x8d\x81\xe5\x8d\x9c\xe5\x8d"
    "\xa9\xe5\x8e\x82\xe5\x8e\xb6\xe5\x8f\x88\xe5\x8f\xa3\xe5\x9b\x97\xe5\x9c"
    "\x9f\xe5\xa3\xab\xe5\xa4\x82\xe5\xa4\x8a\xe5\xa4\x95\xe5\xa4\xa7\xe5\xa5"
    "\xb3\xe5\xad\x90\xe5\xae\x80\xe5\xaf\xb8\xe5\xb0\x8f\xe5\xb0\xa2\xe5\xb0"
    "\xb8\xe5\xb1\xae\xe5\xb1\xb1\xe5\xb7\x9b\xe5\xb7\xa5\xe5\xb7\xb1\xe5\xb7"
    "\xbe\xe5\xb9\xb2\xe5\xb9\xba\xe5\xb9\xbf\xe5\xbb\xb4\xe5\xbb\xbe\xe5\xbc"
    "\x8b\xe5\xbc\x93\xe5\xbd\x90\xe5\xbd\xa1\xe5\xbd\xb3\xe5\xbf\x83\xe6\x88"
    "\x88\xe6\x88\xb6\xe6\x89\x8b\xe6\x94\xaf\xe6\x94\xb4\xe6\x96\x87\xe6\x96"
    "\x97\xe6\x96\xa4\xe6\x96\xb9\xe6\x97\xa0\xe6\x97\xa5\xe6\x9b\xb0\xe6\x9c"
    "\x88\xe6\x9c\xa8\xe6\xac\xa0\xe6\xad\xa2\xe6\xad\xb9\xe6\xae\xb3\xe6\xaf"
    "\x8b\xe6\xaf\x94\xe6\xaf\x9b\xe6\xb0\x8f\xe6\xb0\x94\xe6\xb0\xb4\xe7\x81"
    "\xab\xe7\x88\xaa\xe7\x88\xb6\xe7\x88\xbb\xe7\x88\xbf\xe7\x89\x87\xe7\x89"
    "\x99\xe7\x89\x9b\xe7\x8a\xac\xe7\x8e\x84\xe7\x8e\x89\xe7\x93\x9c\xe7\x93"
    "\xa6\xe7\x94\x98\xe7\x94\x9f\xe7\x94\xa8\xe7\x94\xb0\xe7\x96\x8b\xe7\x96"
    "\x92\xe7\x99\xb6\xe7\x99\xbd\xe7\x9a\xae\xe7\x9a\xbf\xe7\x9b\xae\xe7\x9f"
    "\x9b\xe7\x9f\xa2\xe7\x9f\xb3\xe7\xa4\xba\xe7\xa6\xb8\xe7\xa6\xbe\xe7\xa9"
    "\xb4\xe7\xab\x8b\xe7\xab\xb9\xe7\xb1\xb3\xe7\xb3\xb8\xe7\xbc\xb6\xe7\xbd"
    "\x91\xe7\xbe\x8a\xe7\xbe\xbd\xe8\x80\x81\xe8\x80\x8c\xe8\x80\x92\xe8\x80"
    "\xb3\xe8\x81\xbf\xe8\x82\x89\xe8\x87\xa3\xe8\x87\xaa\xe8\x87\xb3\xe8\x87"
    "\xbc\xe8\x88\x8c\xe8\x88\x9b\xe8\x88\x9f\xe8\x89\xae\xe8\x89\xb2\xe8\x89"
    "\xb8\xe8\x99\x8d\xe8\x99\xab\xe8\xa1\x80\xe8\xa1\x8c\xe8\xa1\xa3\xe8\xa5"
    "\xbe\xe8\xa6\x8b\xe8\xa7\x92\xe8\xa8\x80\xe8\xb0\xb7\xe8\xb1\x86\xe8\xb1"
    "\x95\xe8\xb1\xb8\xe8\xb2\x9d\xe8\xb5\xa4\xe8\xb5\xb0\xe8\xb6\xb3\xe8\xba"
    "\xab\xe8\xbb\x8a\xe8\xbe\x9b\xe8\xbe\xb0\xe8\xbe\xb5\xe9\x82\x91\xe9\x85"
    "\x89\xe9\x87\x86\xe9\x87\x8c\xe9\x87\x91\xe9\x95\xb7\xe9\x96\x80\xe9\x98"
    "\x9c\xe9\x9a\xb6\xe9\x9a\xb9\xe9\x9b\xa8\xe9\x9d\x91\xe9\x9d\x9e\xe9\x9d"
    "\xa2\xe9\x9d\xa9\xe9\x9f\x8b\xe9\x9f\xad\xe9\x9f\xb3\xe9\xa0\x81\xe9\xa2"
    "\xa8\xe9\xa3\x9b\xe9\xa3\x9f\xe9\xa6\x96\xe9\xa6\x99\xe9\xa6\xac\xe9\xaa"
    "\xa8\xe9\xab\x98\xe9\xab\x9f\xe9\xac\xa5\xe9\xac\xaf\xe9\xac\xb2\xe9\xac"
    "\xbc\xe9\xad\x9a\xe9\xb3\xa5\xe9\xb9\xb5\xe9\xb9\xbf\xe9\xba\xa5\xe9\xba"
    "\xbb\xe9\xbb\x83\xe9\xbb\x8d\xe9\xbb\x91\xe9\xbb\xb9\xe9\xbb\xbd\xe9\xbc"
    "\x8e\xe9\xbc\x93\xe9\xbc\xa0\xe9\xbc\xbb\xe9\xbd\x8a\xe9\xbd\x92\xe9\xbe"
    "\x8d\xe9\xbe\x9c\xe9\xbe\xa0\x20\xe3\x80\x92\xe5\x8d\x81\xe5\x8d\x84\xe5"
    "\x8d\x85\x20\xe3\x82\x99\x20\xe3\x82\x9a\xe3\x82\x88\xe3\x82\x8a\xe3\x82"
    "\xb3\xe3\x83\x88\xe1\x84\x80\xe1\x84\x81\xe1\x86\xaa\xe1\x84\x82\xe1\x86"
    "\xac\xe1\x86\xad\xe1\x84\x83\xe1\x84\x84\xe1\x84\x85\xe1\x86\xb0\xe1\x86"
    "\xb1\xe1\x86\xb2\xe1\x86\xb3\xe1\x86\xb4\xe1\x86\xb5\xe1\x84\x9a\xe1\x84"
    "\x86\xe1\x84\x87\xe1\x84\x88\xe1\x84\xa1\xe1\x84\x89\xe1\x84\x8a\xe1\x84"
    "\x8b\xe1\x84\x8c\xe1\x84\x8d\xe1\x84\x8e\xe1\x84\x8f\xe1\x84\x90\xe1\x84"
    "\x91\xe1\x84\x92\xe1\x85\xa1\xe1\x85\xa2\xe1\x85\xa3\xe1\x85\xa4\xe1\x85"
    "\xa5\xe1\x85\xa6\xe1\x85\xa7\xe1\x85\xa8\xe1\x85\xa9\xe1\x85\xaa\xe1\x85"
    "\xab\xe1\x85\xac\xe1\x85\xad\xe1\x85\xae\xe1\x85\xaf\xe1\x85\xb0\xe1\x85"
    "\xb1\xe1\x85\xb2\xe1\x85\xb3\xe1\x85\xb4\xe1\x85\xb5\xe1\x85\xa0\xe1\x84"
    "\x94\xe1\x84\x95\xe1\x87\x87\xe1\x87\x88\xe1\x87\x8c\xe1\x87\x8e\xe1\x87"
    "\x93\xe1\x87\x97\xe1\x87\x99\xe1\x84\x9c\xe1\x87\x9d\xe1\x87\x9f\xe1\x84"
    "\x9d\xe1\x84\x9e\xe1\x84\xa0\xe1\x84\xa2\xe1\x84\xa3\xe1\x84\xa7\xe1\x84"
    "\xa9\xe1\x84\xab\xe1\x84\xac\xe1\x84\xad\xe1\x84\xae\xe1\x84\xaf\xe1\x84"
    "\xb2\xe1\x84\xb6\xe1\x85\x80\xe1\x85\x87\xe1\x85\x8c\xe1\x87\xb1\xe1\x87"
    "\xb2\xe1\x85\x97\xe1\x85\x98\xe1\x85\x99\xe1\x86\x84\xe1\x86\x85\xe1\x86"
    "\x88\xe1\x86\x91\xe1\x86\x92\xe1\x86\x94\xe1\x86\x9e\xe1\x86\xa1\xe4\xb8"
    "\x80\xe4\xba\x8c\xe4\xb8\x89\xe5\x9b\x9b\xe4\xb8\x8a\xe4\xb8\xad\xe4\xb8"
    "\x8b\xe7\x94\xb2\xe4\xb9\x99\xe4\xb8\x99\xe4\xb8\x81\xe5\xa4\xa9\xe5\x9c"
    "\xb0\xe4\xba\xba\x28\xe1\x84\x80\x29\x28\xe1\x84\x82\x29\x28\xe1\x84\x83"
    "\x29\x28\xe1\x84\x85\x29\x28\xe1\x84\x86\x29\x28\xe1\x84\x87\x29\x28\xe1"
    "\x84\x89\x29\x28\xe1\x84\x8b\x29\x28\xe1\x84\x8c\x29\x28\xe1\x84\x8e\x29"
    "\x28\xe1\x84\x8f\x29\x28\xe1\x84\x90\x29\x28\xe1\x84\x91\x29\x28\xe1\x84"
    "\x92\x29\x28\xea\xb0\x80\x29\x28\xeb\x82\x98\x29\x28\xeb\x8b\xa4\x29\x28"
    "\xeb\x9d\xbc\x29\x28\xeb\xa7\x88\x29\x28\xeb\xb0\x94\x29\x28\xec\x82\xac"
    "\x29\x28\xec\x95\x84\x29\x28\xec\x9e\x90\x29\x28\xec\xb0\xa8\x29\x28\xec"
    "\xb9\xb4\x29\x28\xed\x83\x80\x29\x28\xed\x8c\x8c\x29\x28\xed\x95\x98\x29"
    "\x28\xec\xa3\xbc\x29\x28\xec\x98\xa4\xec\xa0\x84\x29\x28\xec\x98\xa4\xed"
    "\x9b\x84\x29\x28\xe4\xb8\x80\x29\x28\xe4\xba\x8c\x29\x28\xe4\xb8\x89\x29"
    "\x28\xe5\x9b\x9b\x29\x28\xe4\xba\x94\x29\x28\xe5\x85\xad\x29\x28\xe4\xb8"
    "\x83\x29\x28\xe5\x85\xab\x29\x28\xe4\xb9\x9d\x29\x28\xe5\x8d\x81\x29\x28"
    "\xe6\x9c\x88\x29\x28\xe7\x81\xab\x29\x28\xe6\xb0\xb4\x29\x28\xe6\x9c\xa8"
    "\x29\x28\xe9\x87\x91\x29\x28\xe5\x9c\x9f\x29\x28\xe6\x97\xa5\x29\x28\xe6"
    "\xa0\xaa\x29\x28\xe6\x9c\x89\x29\x28\xe7\xa4\xbe\x29\x28\xe5\x90\x8d\x29"
    "\x28\xe7\x89\xb9\x29\x28\xe8\xb2\xa1\x29\x28\xe7\xa5\x9d\x29\x28\xe5\x8a"
    "\xb4\x29\x28\xe4\xbb\xa3\x29\x28\xe5\x91\xbc\x29\x28\xe5\xad\xa6\x29\x28"
    "\xe7\x9b\xa3\x29\x28\xe4\xbc\x81\x29\x28\xe8\xb3\x87\x29\x28\xe5\x8d\x94"
    "\x29\x28\xe7\xa5\xad\x29\x28\xe4\xbc\x91\x29\x28\xe8\x87\xaa\x29\x28\xe8"
    "\x87\xb3\x29\xe5\x95\x8f\xe5\xb9\xbc\xe6\x96\x87\xe7\xae\x8f\x50\x54\x45"
    "\x32\x31\x32\x32\x32\x33\x32\x34\x32\x35\x32\x36\x32\x37\x32\x38\x32\x39"
    "\x33\x30\x33\x31\x33\x32\x33\x33\x33\x34\x33\x35\xe1\x84\x80\xe1\x84\x82"
    "\xe1\x84\x83\xe1\x84\x85\xe1\x84\x86\xe1\x84\x87\xe1\x84\x89\xe1\x84\x8b"
    "\xe1\x84\x8c\xe1\x84\x8e\xe1\x84\x8f\xe1\x84\x90\xe1\x84\x91\xe1\x84\x92"
    "\xea\xb0\x80\xeb\x82\x98\xeb\x8b\xa4\xeb\x9d\xbc\xeb\xa7\x88\xeb\xb0\x94"
    "\xec\x82\xac\xec\x95\x84\xec\x9e\x90\xec\xb0\xa8\xec\xb9\xb4\xed\x83\x80"
    "\xed\x8c\x8c\xed\x95\x98\xec\xb0\xb8\xea\xb3\xa0\xec\xa3\xbc\xec\x9d\x98"
    "\xec\x9a\xb0\xe4\xb8\x80\xe4\xba\x8c\xe4\xb8\x89\xe5\x9b\x9b\xe4\xba\x94"
    "\xe5\x85\xad\xe4\xb8\x83\xe5\x85\xab\xe4\xb9\x9d\xe5\x8d\x81\xe6\x9c\x88"
    "\xe7\x81\xab\xe6\xb0\xb4\xe6\x9c\xa8\xe9\x87\x91\xe5\x9c\x9f\xe6\x97\xa5"
    "\xe6\xa0\xaa\xe6\x9c\x89\xe7\xa4\xbe\xe5\x90\x8d\xe7\x89\xb9\xe8\xb2\xa1"
    "\xe7\xa5\x9d\xe5\x8a\xb4\xe7\xa7\x98\xe7\x94\xb7\xe5\xa5\xb3\xe9\x81\xa9"
    "\xe5\x84\xaa\xe5\x8d\xb0\xe6\xb3\xa8\xe9\xa0\x85\xe4\xbc\x91\xe5\x86\x99"
    "\xe6\xad\xa3\xe4\xb8\x8a\xe4\xb8\xad\xe4\xb8\x8b\xe5\xb7\xa6\xe5\x8f\xb3"
    "\xe5\x8c\xbb\xe5\xae\x97\xe5\xad\xa6\xe7\x9b\xa3\xe4\xbc\x81\xe8\xb3\x87"
    "\xe5\x8d\x94\xe5\xa4\x9c\x33\x36\x33\x37\x33\x38\x33\x39\x34\x30\x34\x31"
    "\x34\x32\x34\x33\x34\x34\x34\x35\x34\x36\x34\x37\x34\x38\x34\x39\x35\x30"
    "\x31\xe6\x9c\x88\x32\xe6\x9c\x88\x33\xe6\x9c\x88\x34\xe6\x9c\x88\x35\xe6"
    "\x9c\x88\x36\xe6\x9c\x88\x37\xe6\x9c\x88\x38\xe6\x9c\x88\x39\xe6\x9c\x88"
    "\x31\x30\xe6\x9c\x88\x31\x31\xe6\x9c\x88\x31\x32\xe6\x9c\x88\x48\x67\x65"
    "\x72\x67\x65\x56\x4c\x54\x44\xe3\x82\xa2\xe3\x82\xa4\xe3\x82\xa6\xe3\x82"
    "\xa8\xe3\x82\xaa\xe3\x82\xab\xe3\x82\xad\xe3\x82\xaf\xe3\x82\xb1\xe3\x82"
    "\xb3\xe3\x82\xb5\xe3\x82\xb7\xe3\x82\xb9\xe3\x82\xbb\xe3\x82\xbd\xe3\x82"
    "\xbf\xe3\x83\x81\xe3\x83\x84\xe3\x83\x86\xe3\x83\x88\xe3\x83\x8a\xe3\x83"
    "\x8b\xe3\x83\x8c\xe3\x83\x8d\xe3\x83\x8e\xe3\x83\x8f\xe3\x83\x92\xe3\x83"
    "\x95\xe3\x83\x98\xe3\x83\x9b\xe3\x83\x9e\xe3\x83\x9f\xe3\x83\xa0\xe3\x83"
    "\xa1\xe3\x83\xa2\xe3\x83\xa4\xe3\x83\xa6\xe3\x83\xa8\xe3\x83\xa9\xe3\x83"
    "\xaa\xe3\x83\xab\xe3\x83\xac\xe3\x83\xad\xe3\x83\xaf\xe3\x83\xb0\xe3\x83"
    "\xb1\xe3\x83\xb2\xe4\xbb\xa4\xe5\x92\x8c\xe3\x82\xa2\xe3\x83\x91\xe3\x83"
    "\xbc\xe3\x83\x88\xe3\x82\xa2\xe3\x83\xab\xe3\x83\x95\xe3\x82\xa1\xe3\x82"
    "\xa2\xe3\x83\xb3\xe3\x83\x9a\xe3\x82\xa2\xe3\x82\xa2\xe3\x83\xbc\xe3\x83"
    "\xab\xe3\x82\xa4\xe3\x83\x8b\xe3\x83\xb3\xe3\x82\xb0\xe3\x82\xa4\xe3\x83"
    "\xb3\xe3\x83\x81\xe3\x82\xa6\xe3\x82\xa9\xe3\x83\xb3\xe3\x82\xa8\xe3\x82"
    "\xb9\xe3\x82\xaf\xe3\x83\xbc\xe3\x83\x89\xe3\x82\xa8\xe3\x83\xbc\xe3\x82"
    "\xab\xe3\x83\xbc\xe3\x82\xaa\xe3\x83\xb3\xe3\x82\xb9\xe3\x82\xaa\xe3\x83"
    "\xbc\xe3\x83\xa0\xe3\x82\xab\xe3\x82\xa4\xe3\x83\xaa\xe3\x82\xab\xe3\x83"
    "\xa9\xe3\x83\x83\xe3\x83\x88\xe3\x82\xab\xe3\x83\xad\xe3\x83\xaa\xe3\x83"
    "\xbc\xe3\x82\xac\xe3\x83\xad\xe3\x83\xb3\xe3\x82\xac\xe3\x83\xb3\xe3\x83"
    "\x9e\xe3\x82\xae\xe3\x82\xac\xe3\x82\xae\xe3\x83\x8b\xe3\x83\xbc\xe3\x82"
    "\xad\xe3\x83\xa5\xe3\x83\xaa\xe3\x83\xbc\xe3\x82\xae\xe3\x83\xab\xe3\x83"
    "\x80\xe3\x83\xbc\xe3\x82\xad\xe3\x83\xad\xe3\x82\xad\xe3\x83\xad\xe3\x82"
    "\xb0\xe3\x83\xa9\xe3\x83\xa0\xe3\x82\xad\xe3\x83\xad\xe3\x83\xa1\xe3\x83"
    "\xbc\xe3\x83\x88\xe3\x83\xab\xe3\x82\xad\xe3\x83\xad\xe3\x83\xaf\xe3\x83"
    "\x83\xe3\x83\x88\xe3\x82\xb0\xe3\x83\xa9\xe3\x83\xa0\xe3\x82\xb0\xe3\x83"
    "\xa9\xe3\x83\xa0\xe3\x83\x88\xe3\x83\xb3\xe3\x82\xaf\xe3\x83\xab\xe3\x82"
    "\xbc\xe3\x82\xa4\xe3\x83\xad\xe3\x82\xaf\xe3\x83\xad\xe3\x83\xbc\xe3\x83"
    "\x8d\xe3\x82\xb1\xe3\x83\xbc\xe3\x82\xb9\xe3\x82\xb3\xe3\x83\xab\xe3\x83"
    "\x8a\xe3\x82\xb3\xe3\x83\xbc\xe3\x83\x9d\xe3\x82\xb5\xe3\x82\xa4\xe3\x82"
    "\xaf\xe3\x83\xab\xe3\x82\xb5\xe3\x83\xb3\xe3\x83\x81\xe3\x83\xbc\xe3\x83"
    "\xa0\xe3\x82\xb7\xe3\x83\xaa\xe3\x83\xb3\xe3\x82\xb0\xe3\x82\xbb\xe3\x83"
    "\xb3\xe3\x83\x81\xe3\x82\xbb\xe3\x83\xb3\xe3\x83\x88\xe3\x83\x80\xe3\x83"
    "\xbc\xe3\x82\xb9\xe3\x83\x87\xe3\x82\xb7\xe3\x83\x89\xe3\x83\xab\xe3\x83"
    "\x88\xe3\x83\xb3\xe3\x83\x8a\xe3\x83\x8e\xe3\x83\x8e\xe3\x83\x83\xe3\x83"
    "\x88\xe3\x83\x8f\xe3\x82\xa4\xe3\x83\x84\xe3\x83\x91\xe3\x83\xbc\xe3\x82"
    "\xbb\xe3\x83\xb3\xe3\x83\x88\xe3\x83\x91\xe3\x83\xbc\xe3\x83\x84\xe3\x83"
    "\x90\xe3\x83\xbc\xe3\x83\xac\xe3\x83\xab\xe3\x83\x94\xe3\x82\xa2\xe3\x82"
    "\xb9\xe3\x83\x88\xe3\x83\xab\xe3\x83\x94\xe3\x82\xaf\xe3\x83\xab\xe3\x83"
    "\x94\xe3\x82\xb3\xe3\x83\x93\xe3\x83\xab\xe3\x83\x95\xe3\x82\xa1\xe3\x83"
    "\xa9\xe3\x83\x83\xe3\x83\x89\xe3\x83\x95\xe3\x82\xa3\xe3\x83\xbc\xe3\x83"
    "\x88\xe3\x83\x96\xe3\x83\x83\xe3\x82\xb7\xe3\x82\xa7\xe3\x83\xab\xe3\x83"
    "\x95\xe3\x83\xa9\xe3\x83\xb3\xe3\x83\x98\xe3\x82\xaf\xe3\x82\xbf\xe3\x83"
    "\xbc\xe3\x83\xab\xe3\x83\x9a\xe3\x82\xbd\xe3\x83\x9a\xe3\x83\x8b\xe3\x83"
    "\x92\xe3\x83\x98\xe3\x83\xab\xe3\x83\x84\xe3\x83\x9a\xe3\x83\xb3\xe3\x82"
    "\xb9\xe3\x83\x9a\xe3\x83\xbc\xe3\x82\xb8\xe3\x83\x99\xe3\x83\xbc\xe3\x82"
    "\xbf\xe3\x83\x9d\xe3\x82\xa4\xe3\x83\xb3\xe3\x83\x88\xe3\x83\x9c\xe3\x83"
    "\xab\xe3\x83\x88\xe3\x83\x9b\xe3\x83\xb3\xe3\x83\x9d\xe3\x83\xb3\xe3\x83"
    "\x89\xe3\x83\x9b\xe3\x83\xbc\xe3\x83\xab\xe3\x83\x9b\xe3\x83\xbc\xe3\x83"
    "\xb3\xe3\x83\x9e\xe3\x82\xa4\xe3\x82\xaf\xe3\x83\xad\xe3\x83\x9e\xe3\x82"
    "\xa4\xe3\x83\xab\xe3\x83\x9e\xe3\x83\x83\xe3\x83\x8f\xe3\x83\x9e\xe3\x83"
    "\xab\xe3\x82\xaf\xe3\x83\x9e\xe3\x83\xb3\xe3\x82\xb7\xe3\x83\xa7\xe3\x83"
    "\xb3\xe3\x83\x9f\xe3\x82\xaf\xe3\x83\xad\xe3\x83\xb3\xe3\x83\x9f\xe3\x83"
    "\xaa\xe3\x83\x9f\xe3\x83\xaa\xe3\x83\x90\xe3\x83\xbc\xe3\x83\xab\xe3\x83"
    "\xa1\xe3\x82\xac\xe3\x83\xa1\xe3\x82\xac\xe3\x83\x88\xe3\x83\xb3\xe3\x83"
    "\xa1\xe3\x83\xbc\xe3\x83\x88\xe3\x83\xab\xe3\x83\xa4\xe3\x83\xbc\xe3\x83"
    "\x89\xe3\x83\xa4\xe3\x83\xbc\xe3\x83\xab\xe3\x83\xa6\xe3\x82\xa2\xe3\x83"
    "\xb3\xe3\x83\xaa\xe3\x83\x83\xe3\x83\x88\xe3\x83\xab\xe3\x83\xaa\xe3\x83"
    "\xa9\xe3\x83\xab\xe3\x83\x94\xe3\x83\xbc\xe3\x83\xab\xe3\x83\xbc\xe3\x83"
    "\x96\xe3\x83\xab\xe3\x83\xac\xe3\x83\xa0\xe3\x83\xac\xe3\x83\xb3\xe3\x83"
    "\x88\xe3\x82\xb2\xe3\x83\xb3\xe3\x83\xaf\xe3\x83\x83\xe3\x83\x88\x30\xe7"
    "\x82\xb9\x31\xe7\x82\xb9\x32\xe7\x82\xb9\x33\xe7\x82\xb9\x34\xe7\x82\xb9"
    "\x35\xe7\x82\xb9\x36\xe7\x82\xb9\x37\xe7\x82\xb9\x38\xe7\x82\xb9\x39\xe7"
    "\x82\xb9\x31\x30\xe7\x82\xb9\x31\x31\xe7\x82\xb9\x31\x32\xe7\x82\xb9\x31"
    "\x33\xe7\x82\xb9\x31\x34\xe7\x82\xb9\x31\x35\xe7\x82\xb9\x31\x36\xe7\x82"
    "\xb9\x31\x37\xe7\x82\xb9\x31\x38\xe7\x82\xb9\x31\x39\xe7\x82\xb9\x32\x30"
    "\xe7\x82\xb9\x32\x31\xe7\x82\xb9\x32\x32\xe7\x82\xb9\x32\x33\xe7\x82\xb9"
    "\x32\x34\xe7\x82\xb9\x68\x50\x61\x64\x61\x41\x55\x62\x61\x72\x6f\x56\x70"
    "\x63\x64\x6d\x64\x6d\x32\x64\x6d\x33\x49\x55\xe5\xb9\xb3\xe6\x88\x90\xe6"
    "\x98\xad\xe5\x92\x8c\xe5\xa4\xa7\xe6\xad\xa3\xe6\x98\x8e\xe6\xb2\xbb\xe6"
    "\xa0\xaa\xe5\xbc\x8f\xe4\xbc\x9a\xe7\xa4\xbe\x70\x41\x6e\x41\xce\xbc\x41"
    "\x6d\x41\x6b\x41\x4b\x42\x4d\x42\x47\x42\x63\x61\x6c\x6b\x63\x61\x6c\x70"
    "\x46\x6e\x46\xce\xbc\x46\xce\xbc\x67\x6d\x67\x6b\x67\x48\x7a\x6b\x48\x7a"
    "\x4d\x48\x7a\x47\x48\x7a\x54\x48\x7a\xce\xbc\x6c\x6d\x6c\x64\x6c\x6b\x6c"
    "\x66\x6d\x6e\x6d\xce\xbc\x6d\x6d\x6d\x63\x6d\x6b\x6d\x6d\x6d\x32\x63\x6d"
    "\x32\x6d\x32\x6b\x6d\x32\x6d\x6d\x33\x63\x6d\x33\x6d\x33\x6b\x6d\x33\x6d"
    "\xe2\x88\x95\x73\x6d\xe2\x88\x95\x73\x32\x50\x61\x6b\x50\x61\x4d\x50\x61"
    "\x47\x50\x61\x72\x61\x64\x72\x61\x64\xe2\x88\x95\x73\x72\x61\x64\xe2\x88"
    "\x95\x73\x32\x70\x73\x6e\x73\xce\xbc\x73\x6d\x73\x70\x56\x6e\x56\xce\xbc"
    "\x56\x6d\x56\x6b\x56\x4d\x56\x70\x57\x6e\x57\xce\xbc\x57\x6d\x57\x6b\x57"
    "\x4d\x57\x6b\xce\xa9\x4d\xce\xa9\x61\x2e\x6d\x2e\x42\x71\x63\x63\x63\x64"
    "\x43\xe2\x88\x95\x6b\x67\x43\x6f\x2e\x64\x42\x47\x79\x68\x61\x48\x50\x69"
    "\x6e\x4b\x4b\x4b\x4d\x6b\x74\x6c\x6d\x6c\x6e\x6c\x6f\x67\x6c\x78\x6d\x62"
    "\x6d\x69\x6c\x6d\x6f\x6c\x50\x48\x70\x2e\x6d\x2e\x50\x50\x4d\x50\x52\x73"
    "\x72\x53\x76\x57\x62\x56\xe2\x88\x95\x6d\x41\xe2\x88\x95\x6d\x31\xe6\x97"
    "\xa5\x32\xe6\x97\xa5\x33\xe6\x97\xa5\x34\xe6\x97\xa5\x35\xe6\x97\xa5\x36"
    "\xe6\x97\xa5\x37\xe6\x97\xa5\x38\xe6\x97\xa5\x39\xe6\x97\xa5\x31\x30\xe6"
    "\x97\xa5\x31\x31\xe6\x97\xa5\x31\x32\xe6\x97\xa5\x31\x33\xe6\x97\xa5\x31"
    "\x34\xe6\x97\xa5\x31\x35\xe6\x97\xa5\x31\x36\xe6\x97\xa5\x31\x37\xe6\x97"
    "\xa5\x31\x38\xe6\x97\xa5\x31\x39\xe6\x97\xa5\x32\x30\xe6\x97\xa5\x32\x31"
    "\xe6\x97\xa5\x32\x32\xe6\x97\xa5\x32\x33\xe6\x97\xa5\x32\x34\xe6\x97\xa5"
    "\x32\x35\xe6\x97\xa5\x32\x36\xe6\x97\xa5\x32\x37\xe6\x97\xa5\x32\x38\xe6"
    "\x97\xa5\x32\x39\xe6\x97\xa5\x33\x30\xe6\x97\xa5\x33\x31\xe6\x97\xa5\x67"
    "\x61\x6c\xd1\x8a\xd1\x8c\xea\x9d\xaf\xc4\xa6\xc5\x93\xea\x9c\xa7\xea\xac"
    "\xb7\xc9\xab\xea\xad\x92\xca\x8d\xe8\xb1\x88\xe6\x9b\xb4\xe8\xbb\x8a\xe8"
    "\xb3\x88\xe6\xbb\x91\xe4\xb8\xb2\xe5\x8f\xa5\xe9\xbe\x9c\xe9\xbe\x9c\xe5"
    "\xa5\x91\xe9\x87\x91\xe5\x96\x87\xe5\xa5\x88\xe6\x87\xb6\xe7\x99\xa9\xe7"
    "\xbe\x85\xe8\x98\xbf\xe8\x9e\xba\xe8\xa3\xb8\xe9\x82\x8f\xe6\xa8\x82\xe6"
    "\xb4\x9b\xe7\x83\x99\xe7\x8f\x9e\xe8\x90\xbd\xe9\x85\xaa\xe9\xa7\xb1\xe4"
    "\xba\x82\xe5\x8d\xb5\xe6\xac\x84\xe7\x88\x9b\xe8\x98\xad\xe9\xb8\x9e\xe5"
    "\xb5\x90\xe6\xbf\xab\xe8\x97\x8d\xe8\xa5\xa4\xe6\x8b\x89\xe8\x87\x98\xe8"
    "\xa0\x9f\xe5\xbb\x8a\xe6\x9c\x97\xe6\xb5\xaa\xe7\x8b\xbc\xe9\x83\x8e\xe4"
    "\xbe\x86\xe5\x86\xb7\xe5\x8b\x9e\xe6\x93\x84\xe6\xab\x93\xe7\x88\x90\xe7"
    "\x9b\xa7\xe8\x80\x81\xe8\x98\x86\xe8\x99\x9c\xe8\xb7\xaf\xe9\x9c\xb2\xe9"
    "\xad\xaf\xe9\xb7\xba\xe7\xa2\x8c\xe7\xa5\xbf\xe7\xb6\xa0\xe8\x8f\x89\xe9"
    "\x8c\x84\xe9\xb9\xbf\xe8\xab\x96\xe5\xa3\x9f\xe5\xbc\x84\xe7\xb1\xa0\xe8"
    "\x81\xbe\xe7\x89\xa2\xe7\xa3\x8a\xe8\xb3\x82\xe9\x9b\xb7\xe5\xa3\x98\xe5"
    "\xb1\xa2\xe6\xa8\x93\xe6\xb7\x9a\xe6\xbc\x8f\xe7\xb4\xaf\xe7\xb8\xb7\xe9"
    "\x99\x8b\xe5\x8b\x92\xe8\x82\x8b\xe5\x87\x9c\xe5\x87\x8c\xe7\xa8\x9c\xe7"
    "\xb6\xbe\xe8\x8f\xb1\xe9\x99\xb5\xe8\xae\x80\xe6\x8b\x8f\xe6\xa8\x82\xe8"
    "\xab\xbe\xe4\xb8\xb9\xe5\xaf\xa7\xe6\x80\x92\xe7\x8e\x87\xe7\x95\xb0\xe5"
    "\x8c\x97\xe7\xa3\xbb\xe4\xbe\xbf\xe5\xbe\xa9\xe4\xb8\x8d\xe6\xb3\x8c\xe6"
    "\x95\xb8\xe7\xb4\xa2\xe5\x8f\x83\xe5\xa1\x9e\xe7\x9c\x81\xe8\x91\x89\xe8"
    "\xaa\xaa\xe6\xae\xba\xe8\xbe\xb0\xe6\xb2\x88\xe6\x8b\xbe\xe8\x8b\xa5\xe6"
    "\x8e\xa0\xe7\x95\xa5\xe4\xba\xae\xe5\x85\xa9\xe5\x87\x89\xe6\xa2\x81\xe7"
    "\xb3\xa7\xe8\x89\xaf\xe8\xab\x92\xe9\x87\x8f\xe5\x8b\xb5\xe5\x91\x82\xe5"
    "\xa5\xb3\xe5\xbb\xac\xe6\x97\x85\xe6\xbf\xbe\xe7\xa4\xaa\xe9\x96\xad\xe9"
    "\xa9\xaa\xe9\xba\x97\xe9\xbb\x8e\xe5\x8a\x9b\xe6\x9b\x86\xe6\xad\xb7\xe8"
    "\xbd\xa2\xe5\xb9\xb4\xe6\x86\x90\xe6\x88\x80\xe6\x92\x9a\xe6\xbc\xa3\xe7"
    "\x85\x89\xe7\x92\x89\xe7\xa7\x8a\xe7\xb7\xb4\xe8\x81\xaf\xe8\xbc\xa6\xe8"
    "\x93\xae\xe9\x80\xa3\xe9\x8d\x8a\xe5\x88\x97\xe5\x8a\xa3\xe5\x92\xbd\xe7"
    "\x83\x88\xe8\xa3\x82\xe8\xaa\xaa\xe5\xbb\x89\xe5\xbf\xb5\xe6\x8d\xbb\xe6"
    "\xae\xae\xe7\xb0\xbe\xe7\x8d\xb5\xe4\xbb\xa4\xe5\x9b\xb9\xe5\xaf\xa7\xe5"
    "\xb6\xba\xe6\x80\x9c\xe7\x8e\xb2\xe7\x91\xa9\xe7\xbe\x9a\xe8\x81\x86\xe9"
    "\x88\xb4\xe9\x9b\xb6\xe9\x9d\x88\xe9\xa0\x98\xe4\xbe\x8b\xe7\xa6\xae\xe9"
    "\x86\xb4\xe9\x9a\xb8\xe6\x83\xa1\xe4\xba\x86\xe5\x83\x9a\xe5\xaf\xae\xe5"
    "\xb0\xbf\xe6\x96\x99\xe6\xa8\x82\xe7\x87\x8e\xe7\x99\x82\xe8\x93\xbc\xe9"
    "\x81\xbc\xe9\xbe\x8d\xe6\x9a\x88\xe9\x98\xae\xe5\x8a\x89\xe6\x9d\xbb\xe6"
    "\x9f\xb3\xe6\xb5\x81\xe6\xba\x9c\xe7\x90\x89\xe7\x95\x99\xe7\xa1\xab\xe7"
    "\xb4\x90\xe9\xa1\x9e\xe5\x85\xad\xe6\x88\xae\xe9\x99\xb8\xe5\x80\xab\xe5"
    "\xb4\x99\xe6\xb7\xaa\xe8\xbc\xaa\xe5\xbe\x8b\xe6\x85\x84\xe6\xa0\x97\xe7"
    "\x8e\x87\xe9\x9a\x86\xe5\x88\xa9\xe5\x90\x8f\xe5\xb1\xa5\xe6\x98\x93\xe6"
    "\x9d\x8e\xe6\xa2\xa8\xe6\xb3\xa5\xe7\x90\x86\xe7\x97\xa2\xe7\xbd\xb9\xe8"
    "\xa3\x8f\xe8\xa3\xa1\xe9\x87\x8c\xe9\x9b\xa2\xe5\x8c\xbf\xe6\xba\xba\xe5"
    "\x90\x9d\xe7\x87\x90\xe7\x92\x98\xe8\x97\xba\xe9\x9a\xa3\xe9\xb1\x97\xe9"
    "\xba\x9f\xe6\x9e\x97\xe6\xb7\x8b\xe8\x87\xa8\xe7\xab\x8b\xe7\xac\xa0\xe7"
    "\xb2\x92\xe7\x8b\x80\xe7\x82\x99\xe8\xad\x98\xe4\xbb\x80\xe8\x8c\xb6\xe5"
    "\x88\xba\xe5\x88\x87\xe5\xba\xa6\xe6\x8b\x93\xe7\xb3\x96\xe5\xae\x85\xe6"
    "\xb4\x9e\xe6\x9a\xb4\xe8\xbc\xbb\xe8\xa1\x8c\xe9\x99\x8d\xe8\xa6\x8b\xe5"
    "\xbb\x93\xe5\x85\x80\xe5\x97\x80\xe5\xa1\x9a\xe6\x99\xb4\xe5\x87\x9e\xe7"
    "\x8c\xaa\xe7\x9b\x8a\xe7\xa4\xbc\xe7\xa5\x9e\xe7\xa5\xa5\xe7\xa6\x8f\xe9"
    "\x9d\x96\xe7\xb2\xbe\xe7\xbe\xbd\xe8\x98\x92\xe8\xab\xb8\xe9\x80\xb8\xe9"
    "\x83\xbd\xe9\xa3\xaf\xe9\xa3\xbc\xe9\xa4\xa8\xe9\xb6\xb4\xe9\x83\x9e\xe9"
    "\x9a\xb7\xe4\xbe\xae\xe5\x83\xa7\xe5\x85\x8d\xe5\x8b\x89\xe5\x8b\xa4\xe5"
    "\x8d\x91\xe5\x96\x9d\xe5\x98\x86\xe5\x99\xa8\xe5\xa1\x80\xe5\xa2\xa8\xe5"
    "\xb1\xa4\xe5\xb1\xae\xe6\x82\x94\xe6\x85\xa8\xe6\x86\x8e\xe6\x87\xb2\xe6"
    "\x95\x8f\xe6\x97\xa2\xe6\x9a\x91\xe6\xa2\x85\xe6\xb5\xb7\xe6\xb8\x9a\xe6"
    "\xbc\xa2\xe7\x85\xae\xe7\x88\xab\xe7\x90\xa2\xe7\xa2\x91\xe7\xa4\xbe\xe7"
    "\xa5\x89\xe7\xa5\x88\xe7\xa5\x90\xe7\xa5\x96\xe7\xa5\x9d\xe7\xa6\x8d\xe7"
    "\xa6\x8e\xe7\xa9\x80\xe7\xaa\x81\xe7\xaf\x80\xe7\xb7\xb4\xe7\xb8\x89\xe7"
    "\xb9\x81\xe7\xbd\xb2\xe8\x80\x85\xe8\x87\xad\xe8\x89\xb9\xe8\x89\xb9\xe8"
    "\x91\x97\xe8\xa4\x90\xe8\xa6\x96\xe8\xac\x81\xe8\xac\xb9\xe8\xb3\x93\xe8"
    "\xb4\x88\xe8\xbe\xb6\xe9\x80\xb8\xe9\x9b\xa3\xe9\x9f\xbf\xe9\xa0\xbb\xe6"
    "\x81\xb5\xf0\xa4\x8b\xae\xe8\x88\x98\xe4\xb8\xa6\xe5\x86\xb5\xe5\x85\xa8"
    "\xe4\xbe\x80\xe5\x85\x85\xe5\x86\x80\xe5\x8b\x87\xe5\x8b\xba\xe5\x96\x9d"
    "\xe5\x95\x95\xe5\x96\x99\xe5\x97\xa2\xe5\xa1\x9a\xe5\xa2\xb3\xe5\xa5\x84"
    "\xe5\xa5\x94\xe5\xa9\xa2\xe5\xac\xa8\xe5\xbb\x92\xe5\xbb\x99\xe5\xbd\xa9"
    "\xe5\xbe\xad\xe6\x83\x98\xe6\x85\x8e\xe6\x84\x88\xe6\x86\x8e\xe6\x85\xa0"
    "\xe6\x87\xb2\xe6\x88\xb4\xe6\x8f\x84\xe6\x90\x9c\xe6\x91\x92\xe6\x95\x96"
    "\xe6\x99\xb4\xe6\x9c\x97\xe6\x9c\x9b\xe6\x9d\x96\xe6\xad\xb9\xe6\xae\xba"
    "\xe6\xb5\x81\xe6\xbb\x9b\xe6\xbb\x8b\xe6\xbc\xa2\xe7\x80\x9e\xe7\x85\xae"
    "\xe7\x9e\xa7\xe7\x88\xb5\xe7\x8a\xaf\xe7\x8c\xaa\xe7\x91\xb1\xe7\x94\x86"
    "\xe7\x94\xbb\xe7\x98\x9d\xe7\x98\x9f\xe7\x9b\x8a\xe7\x9b\x9b\xe7\x9b\xb4"
    "\xe7\x9d\x8a\xe7\x9d\x80\xe7\xa3\x8c\xe7\xaa\xb1\xe7\xaf\x80\xe7\xb1\xbb"
    "\xe7\xb5\x9b\xe7\xb7\xb4\xe7\xbc\xbe\xe8\x80\x85\xe8\x8d\x92\xe8\x8f\xaf"
    "\xe8\x9d\xb9\xe8\xa5\x81\xe8\xa6\x86\xe8\xa6\x96\xe8\xaa\xbf\xe8\xab\xb8"
    "\xe8\xab\x8b\xe8\xac\x81\xe8\xab\xbe\xe8\xab\xad\xe8\xac\xb9\xe8\xae\x8a"
    "\xe8\xb4\x88\xe8\xbc\xb8\xe9\x81\xb2\xe9\x86\x99\xe9\x89\xb6\xe9\x99\xbc"
    "\xe9\x9b\xa3\xe9\x9d\x96\xe9\x9f\x9b\xe9\x9f\xbf\xe9\xa0\x8b\xe9\xa0\xbb"
    "\xe9\xac\x92\xe9\xbe\x9c\xf0\xa2\xa1\x8a\xf0\xa2\xa1\x84\xf0\xa3\x8f\x95"
    "\xe3\xae\x9d\xe4\x80\x98\xe4\x80\xb9\xf0\xa5\x89\x89\xf0\xa5\xb3\x90\xf0"
    "\xa7\xbb\x93\xe9\xbd\x83\xe9\xbe\x8e\x66\x66\x66\x69\x66\x6c\x66\x66\x69"
    "\x66\x66\x6c\x73\x74\x73\x74\xd5\xb4\xd5\xb6\xd5\xb4\xd5\xa5\xd5\xb4\xd5"
    "\xab\xd5\xbe\xd5\xb6\xd5\xb4\xd5\xad\xd7\x99\xd6\xb4\xd7\xb2\xd6\xb7\xd7"
    "\xa2\xd7\x90\xd7\x93\xd7\x94\xd7\x9b\xd7\x9c\xd7\x9d\xd7\xa8\xd7\xaa\x2b"
    "\xd7\xa9\xd7\x81\xd7\xa9\xd7\x82\xd7\xa9\xd6\xbc\xd7\x81\xd7\xa9\xd6\xbc"
    "\xd7\x82\xd7\x90\xd6\xb7\xd7\x90\xd6\xb8\xd7\x90\xd6\xbc\xd7\x91\xd6\xbc"
    "\xd7\x92\xd6\xbc\xd7\x93\xd6\xbc\xd7\x94\xd6\xbc\xd7\x95\xd6\xbc\xd7\x96"
    "\xd6\xbc\xd7\x98\xd6\xbc\xd7\x99\xd6\xbc\xd7\x9a\xd6\xbc\xd7\x9b\xd6\xbc"
    "\xd7\x9c\xd6\xbc\xd7\x9e\xd6\xbc\xd7\xa0\xd6\xbc\xd7\xa1\xd6\xbc\xd7\xa3"
    "\xd6\xbc\xd7\xa4\xd6\xbc\xd7\xa6\xd6\xbc\xd7\xa7\xd6\xbc\xd7\xa8\xd6\xbc"
    "\xd7\xa9\xd6\xbc\xd7\xaa\xd6\xbc\xd7\x95\xd6\xb9\xd7\x91\xd6\xbf\xd7\x9b"
    "\xd6\xbf\xd7\xa4\xd6\xbf\xd7\x90\xd7\x9c\xd9\xb1\xd9\xb1\xd9\xbb\xd9\xbb"
    "\xd9\xbb\xd9\xbb\xd9\xbe\xd9\xbe\xd9\xbe\xd9\xbe\xda\x80\xda\x80\xda\x80"
    "\xda\x80\xd9\xba\xd9\xba\xd9\xba\xd9\xba\xd9\xbf\xd9\xbf\xd9\xbf\xd9\xbf"
    "\xd9\xb9\xd9\xb9\xd9\xb9\xd9\xb9\xda\xa4\xda\xa4\xda\xa4\xda\xa4\xda\xa6"
    "\xda\xa6\xda\xa6\xda\xa6\xda\x84\xda\x84\xda\x84\xda\x84\xda\x83\xda\x83"
    "\xda\x83\xda\x83\xda\x86\xda\x86\xda\x86\xda\x86\xda\x87\xda\x87\xda\x87"
    "\xda\x87\xda\x8d\xda\x8d\xda\x8c\xda\x8c\xda\x8e\xda\x8e\xda\x88\xda\x88"
    "\xda\x98\xda\x98\xda\x91\xda\x91\xda\xa9\xda\xa9\xda\xa9\xda\xa9\xda\xaf"
    "\xda\xaf\xda\xaf\xda\xaf\xda\xb3\xda\xb3\xda\xb3\xda\xb3\xda\xb1\xda\xb1"
    "\xda\xb1\xda\xb1\xda\xba\xda\xba\xda\xbb\xda\xbb\xda\xbb\xda\xbb\xdb\x80"
    "\xdb\x80\xdb\x81\xdb\x81\xdb\x81\xdb\x81\xda\xbe\xda\xbe\xda\xbe\xda\xbe"
    "\xdb\x92\xdb\x92\xdb\x93\xdb\x93\xda\xad\xda\xad\xda\xad\xda\xad\xdb\x87"
    "\xdb\x87\xdb\x86\xdb\x86\xdb\x88\xdb\x88\xdb\x87\xd9\xb4\xdb\x8b\xdb\x8b"
    "\xdb\x85\xdb\x85\xdb\x89\xdb\x89\xdb\x90\xdb\x90\xdb\x90\xdb\x90\xd9\x89"
    "\xd9\x89\xd8\xa6\xd8\xa7\xd8\xa6\xd8\xa7\xd8\xa6\xdb\x95\xd8\xa6\xdb\x95"
    "\xd8\xa6\xd9\x88\xd8\xa6\xd9\x88\xd8\xa6\xdb\x87\xd8\xa6\xdb\x87\xd8\xa6"
    "\xdb\x86\xd8\xa6\xdb\x86\xd8\xa6\xdb\x88\xd8\xa6\xdb\x88\xd8\xa6\xdb\x90"
    "\xd8\xa6\xdb\x90\xd8\xa6\xdb\x90\xd8\xa6\xd9\x89\xd8\xa6\xd9\x89\xd8\xa6"
    "\xd9\x89\xdb\x8c\xdb\x8c\xdb\x8c\xdb\x8c\xd8\xa6\xd8\xac\xd8\xa6\xd8\xad"
    "\xd8\xa6\xd9\x85\xd8\xa6\xd9\x89\xd8\xa6\xd9\x8a\xd8\xa8\xd8\xac\xd8\xa8"
    "\xd8\xad\xd8\xa8\xd8\xae\xd8\xa8\xd9\x85\xd8\xa8\xd9\x89\xd8\xa8\xd9\x8a"
    "\xd8\xaa\xd8\xac\xd8\xaa\xd8\xad\xd8\xaa\xd8\xae\xd8\xaa\xd9\x85\xd8\xaa"
    "\xd9\x89\xd8\xaa\xd9\x8a\xd8\xab\xd8\xac\xd8\xab\xd9\x85\xd8\xab\xd9\x89"
    "\xd8\xab\xd9\x8a\xd8\xac\xd8\xad\xd8\xac\xd9\x85\xd8\xad\xd8\xac\xd8\xad"
    "\xd9\x85\xd8\xae\xd8\xac\xd8\xae\xd8\xad\xd8\xae\xd9\x85\xd8\xb3\xd8\xac"
    "\xd8\xb3\xd8\xad\xd8\xb3\xd8\xae\xd8\xb3\xd9\x85\xd8\xb5\xd8\xad\xd8\xb5"
    "\xd9\x85\xd8\xb6\xd8\xac\xd8\xb6\xd8\xad\xd8\xb6\xd8\xae\xd8\xb6\xd9\x85"
    "\xd8\xb7\xd8\xad\xd8\xb7\xd9\x85\xd8\xb8\xd9\x85\xd8\xb9\xd8\xac\xd8\xb9"
    "\xd9\x85\xd8\xba\xd8\xac\xd8\xba\xd9\x85\xd9\x81\xd8\xac\xd9\x81\xd8\xad"
    "\xd9\x81\xd8\xae\xd9\x81\xd9\x85\xd9\x81\xd9\x89\xd9\x81\xd9\x8a\xd9\x82"
    "\xd8\xad\xd9\x82\xd9\x85\xd9\x82\xd9\x89\xd9\x82\xd9\x8a\xd9\x83\xd8\xa7"
    "\xd9\x83\xd8\xac\xd9\x83\xd8\xad\xd9\x83\xd8\xae\xd9\x83\xd9\x84\xd9\x83"
    "\xd9\x85\xd9\x83\xd9\x89\xd9\x83\xd9\x8a\xd9\x84\xd8\xac\xd9\x84\xd8\xad"
    "\xd9\x84\xd8\xae\xd9\x84\xd9\x85\xd9\x84\xd9\x89\xd9\x84\xd9\x8a\xd9\x85"
    "\xd8\xac\xd9\x85\xd8\xad\xd9\x85\xd8\xae\xd9\x85\xd9\x85\xd9\x85\xd9\x89"
    "\xd9\x85\xd9\x8a\xd9\x86\xd8\xac\xd9\x86\xd8\xad\xd9\x86\xd8\xae\xd9\x86"
    "\xd9\x85\xd9\x86\xd9\x89\xd9\x86\xd9\x8a\xd9\x87\xd8\xac\xd9\x87\xd9\x85"
    "\xd9\x87\xd9\x89\xd9\x87\xd9\x8a\xd9\x8a\xd8\xac\xd9\x8a\xd8\xad\xd9\x8a"
    "\xd8\xae\xd9\x8a\xd9\x85\xd9\x8a\xd9\x89\xd9\x8a\xd9\x8a\xd8\xb0\xd9\xb0"
    "\xd8\xb1\xd9\xb0\xd9\x89\xd9\xb0\x20\xd9\x8c\xd9\x91\x20\xd9\x8d\xd9\x91"
    "\x20\xd9\x8e\xd9\x91\x20\xd9\x8f\xd9\x91\x20\xd9\x90\xd9\x91\x20\xd9\x91"
    "\xd9\xb0\xd8\xa6\xd8\xb1\xd8\xa6\xd8\xb2\xd8\xa6\xd9\x85\xd8\xa6\xd9\x86"
    "\xd8\xa6\xd9\x89\xd8\xa6\xd9\x8a\xd8\xa8\xd8\xb1\xd8\xa8\xd8\xb2\xd8\xa8"
    "\xd9\x85\xd8\xa8\xd9\x86\xd8\xa8\xd9\x89\xd8\xa8\xd9\x8a\xd8\xaa\xd8\xb1"
    "\xd8\xaa\xd8\xb2\xd8\xaa\xd9\x85\xd8\xaa\xd9\x86\xd8\xaa\xd9\x89\xd8\xaa"
    "\xd9\x8a\xd8\xab\xd8\xb1\xd8\xab\xd8\xb2\xd8\xab\xd9\x85\xd8\xab\xd9\x86"
    "\xd8\xab\xd9\x89\xd8\xab\xd9\x8a\xd9\x81\xd9\x89\xd9\x81\xd9\x8a\xd9\x82"
    "\xd9\x89\xd9\x82\xd9\x8a\xd9\x83\xd8\xa7\xd9\x83\xd9\x84\xd9\x83\xd9\x85"
    "\xd9\x83\xd9\x89\xd9\x83\xd9\x8a\xd9\x84\xd9\x85\xd9\x84\xd9\x89\xd9\x84"
    "\xd9\x8a\xd9\x85\xd8\xa7\xd9\x85\xd9\x85\xd9\x86\xd8\xb1\xd9\x86\xd8\xb2"
    "\xd9\x86\xd9\x85\xd9\x86\xd9\x86\xd9\x86\xd9\x89\xd9\x86\xd9\x8a\xd9\x89"
    "\xd9\xb0\xd9\x8a\xd8\xb1\xd9\x8a\xd8\xb2\xd9\x8a\xd9\x85\xd9\x8a\xd9\x86"
    "\xd9\x8a\xd9\x89\xd9\x8a\xd9\x8a\xd8\xa6\xd8\xac\xd8\xa6\xd8\xad\xd8\xa6"
    "\xd8\xae\xd8\xa6\xd9\x85\xd8\xa6\xd9\x87\xd8\xa8\xd8\xac\xd8\xa8\xd8\xad"
    "\xd8\xa8\xd8\xae\xd8\xa8\xd9\x85\xd8\xa8\xd9\x87\xd8\xaa\xd8\xac\xd8\xaa"
    "\xd8\xad\xd8\xaa\xd8\xae\xd8\xaa\xd9\x85\xd8\xaa\xd9\x87\xd8\xab\xd9\x85"
    "\xd8\xac\xd8\xad\xd8\xac\xd9\x85\xd8\xad\xd8\xac\xd8\xad\xd9\x85\xd8\xae"
    "\xd8\xac\xd8\xae\xd9\x85\xd8\xb3\xd8\xac\xd8\xb3\xd8\xad\xd8\xb3\xd8\xae"
    "\xd8\xb3\xd9\x85\xd8\xb5\xd8\xad\xd8\xb5\xd8\xae\xd8\xb5\xd9\x85\xd8\xb6"
    "\xd8\xac\xd8\xb6\xd8\xad\xd8\xb6\xd8\xae\xd8\xb6\xd9\x85\xd8\xb7\xd8\xad"
    "\xd8\xb8\xd9\x85\xd8\xb9\xd8\xac\xd8\xb9\xd9\x85\xd8\xba\xd8\xac\xd8\xba"
    "\xd9\x85\xd9\x81\xd8\xac\xd9\x81\xd8\xad\xd9\x81\xd8\xae\xd9\x81\xd9\x85"
    "\xd9\x82\xd8\xad\xd9\x82\xd9\x85\xd9\x83\xd8\xac\xd9\x83\xd8\xad\xd9\x83"
    "\xd8\xae\xd9\x83\xd9\x84\xd9\x83\xd9\x85\xd9\x84\xd8\xac\xd9\x84\xd8\xad"
    "\xd9\x84\xd8\xae\xd9\x84\xd9\x85\xd9\x84\xd9\x87\xd9\x85\xd8\xac\xd9\x85"
    "\xd8\xad\xd9\x85\xd8\xae\xd9\x85\xd9\x85\xd9\x86\xd8\xac\xd9\x86\xd8\xad"
    "\xd9\x86\xd8\xae\xd9\x86\xd9\x85\xd9\x86\xd9\x87\xd9\x87\xd8\xac\xd9\x87"
    "\xd9\x85\xd9\x87\xd9\xb0\xd9\x8a\xd8\xac\xd9\x8a\xd8\xad\xd9\x8a\xd8\xae"
    "\xd9\x8a\xd9\x85\xd9\x8a\xd9\x87\xd8\xa6\xd9\x85\xd8\xa6\xd9\x87\xd8\xa8"
    "\xd9\x85\xd8\xa8\xd9\x87\xd8\xaa\xd9\x85\xd8\xaa\xd9\x87\xd8\xab\xd9\x85"
    "\xd8\xab\xd9\x87\xd8\xb3\xd9\x85\xd8\xb3\xd9\x87\xd8\xb4\xd9\x85\xd8\xb4"
    "\xd9\x87\xd9\x83\xd9\x84\xd9\x83\xd9\x85\xd9\x84\xd9\x85\xd9\x86\xd9\x85"
    "\xd9\x86\xd9\x87\xd9\x8a\xd9\x85\xd9\x8a\xd9\x87\xd9\x80\xd9\x8e\xd9\x91"
    "\xd9\x80\xd9\x8f\xd9\x91\xd9\x80\xd9\x90\xd9\x91\xd8\xb7\xd9\x89\xd8\xb7"
    "\xd9\x8a\xd8\xb9\xd9\x89\xd8\xb9\xd9\x8a\xd8\xba\xd9\x89\xd8\xba\xd9\x8a"
    "\xd8\xb3\xd9\x89\xd8\xb3\xd9\x8a\xd8\xb4\xd9\x89\xd8\xb4\xd9\x8a\xd8\xad"
    "\xd9\x89\xd8\xad\xd9\x8a\xd8\xac\xd9\x89\xd8\xac\xd9\x8a\xd8\xae\xd9\x89"
    "\xd8\xae\xd9\x8a\xd8\xb5\xd9\x89\xd8\xb5\xd9\x8a\xd8\xb6\xd9\x89\xd8\xb6"
    "\xd9\x8a\xd8\xb4\xd8\xac\xd8\xb4\xd8\xad\xd8\xb4\xd8\xae\xd8\xb4\xd9\x85"
    "\xd8\xb4\xd8\xb1\xd8\xb3\xd8\xb1\xd8\xb5\xd8\xb1\xd8\xb6\xd8\xb1\xd8\xb7"
    "\xd9\x89\xd8\xb7\xd9\x8a\xd8\xb9\xd9\x89\xd8\xb9\xd9\x8a\xd8\xba\xd9\x89"
    "\xd8\xba\xd9\x8a\xd8\xb3\xd9\x89\xd8\xb3\xd9\x8a\xd8\xb4\xd9\x89\xd8\xb4"
    "\xd9\x8a\xd8\xad\xd9\x89\xd8\xad\xd9\x8a\xd8\xac\xd9\x89\xd8\xac\xd9\x8a"
    "\xd8\xae\xd9\x89\xd8\xae\xd9\x8a\xd8\xb5\xd9\x89\xd8\xb5\xd9\x8a\xd8\xb6"
    "\xd9\x89\xd8\xb6\xd9\x8a\xd8\xb4\xd8\xac\xd8\xb4\xd8\xad\xd8\xb4\xd8\xae"
    "\xd8\xb4\xd9\x85\xd8\xb4\xd8\xb1\xd8\xb3\xd8\xb1\xd8\xb5\xd8\xb1\xd8\xb6"
    "\xd8\xb1\xd8\xb4\xd8\xac\xd8\xb4\xd8\xad\xd8\xb4\xd8\xae\xd8\xb4\xd9\x85"
    "\xd8\xb3\xd9\x87\xd8\xb4\xd9\x87\xd8\xb7\xd9\x85\xd8\xb3\xd8\xac\xd8\xb3"
    "\xd8\xad\xd8\xb3\xd8\xae\xd8\xb4\xd8\xac\xd8\xb4\xd8\xad\xd8\xb4\xd8\xae"
    "\xd8\xb7\xd9\x85\xd8\xb8\xd9\x85\xd8\xa7\xd9\x8b\xd8\xa7\xd9\x8b\xd8\xaa"
    "\xd8\xac\xd9\x85\xd8\xaa\xd8\xad\xd8\xac\xd8\xaa\xd8\xad\xd8\xac\xd8\xaa"
    "\xd8\xad\xd9\x85\xd8\xaa\xd8\xae\xd9\x85\xd8\xaa\xd9\x85\xd8\xac\xd8\xaa"
    "\xd9\x85\xd8\xad\xd8\xaa\xd9\x85\xd8\xae\xd8\xac\xd9\x85\xd8\xad\xd8\xac"
    "\xd9\x85\xd8\xad\xd8\xad\xd9\x85\xd9\x8a\xd8\xad\xd9\x85\xd9\x89\xd8\xb3"
    "\xd8\xad\xd8\xac\xd8\xb3\xd8\xac\xd8\xad\xd8\xb3\xd8\xac\xd9\x89\xd8\xb3"
    "\xd9\x85\xd8\xad\xd8\xb3\xd9\x85\xd8\xad\xd8\xb3\xd9\x85\xd8\xac\xd8\xb3"
    "\xd9\x85\xd9\x85\xd8\xb3\xd9\x85\xd9\x85\xd8\xb5\xd8\xad\xd8\xad\xd8\xb5"
    "\xd8\xad\xd8\xad\xd8\xb5\xd9\x85\xd9\x85\xd8\xb4\xd8\xad\xd9\x85\xd8\xb4"
    "\xd8\xad\xd9\x85\xd8\xb4\xd8\xac\xd9\x8a\xd8\xb4\xd9\x85\xd8\xae\xd8\xb4"
    "\xd9\x85\xd8\xae\xd8\xb4\xd9\x85\xd9\x85\xd8\xb4\xd9\x85\xd9\x85\xd8\xb6"
    "\xd8\xad\xd9\x89\xd8\xb6\xd8\xae\xd9\x85\xd8\xb6\xd8\xae\xd9\x85\xd8\xb7"
    "\xd9\x85\xd8\xad\xd8\xb7\xd9\x85\xd8\xad\xd8\xb7\xd9\x85\xd9\x85\xd8\xb7"
    "\xd9\x85\xd9\x8a\xd8\xb9\xd8\xac\xd9\x85\xd8\xb9\xd9\x85\xd9\x85\xd8\xb9"
    "\xd9\x85\xd9\x85\xd8\xb9\xd9\x85\xd9\x89\xd8\xba\xd9\x85\xd9\x85\xd8\xba"
    "\xd9\x85\xd9\x8a\xd8\xba\xd9\x85\xd9\x89\xd9\x81\xd8\xae\xd9\x85\xd9\x81"
    "\xd8\xae\xd9\x85\xd9\x82\xd9\x85\xd8\xad\xd9\x82\xd9\x85\xd9\x85\xd9\x84"
    "\xd8\xad\xd9\x85\xd9\x84\xd8\xad\xd9\x8a\xd9\x84\xd8\xad\xd9\x89\xd9\x84"
    "\xd8\xac\xd8\xac\xd9\x84\xd8\xac\xd8\xac\xd9\x84\xd8\xae\xd9\x85\xd9\x84"
    "\xd8\xae\xd9\x85\xd9\x84\xd9\x85\xd8\xad\xd9\x84\xd9\x85\xd8\xad\xd9\x85"
    "\xd8\xad\xd8\xac\xd9\x85\xd8\xad\xd9\x85\xd9\x85\xd8\xad\xd9\x8a\xd9\x85"
    "\xd8\xac\xd8\xad\xd9\x85\xd8\xac\xd9\x85\xd9\x85\xd8\xae\xd8\xac\xd9\x85"
    "\xd8\xae\xd9\x85\xd9\x85\xd8\xac\xd8\xae\xd9\x87\xd9\x85\xd8\xac\xd9\x87"
    "\xd9\x85\xd9\x85\xd9\x86\xd8\xad\xd9\x85\xd9\x86\xd8\xad\xd9\x89\xd9\x86"
    "\xd8\xac\xd9\x85\xd9\x86\xd8\xac\xd9\x85\xd9\x86\xd8\xac\xd9\x89\xd9\x86"
    "\xd9\x85\xd9\x8a\xd9\x86\xd9\x85\xd9\x89\xd9\x8a\xd9\x85\xd9\x85\xd9\x8a"
    "\xd9\x85\xd9\x85\xd8\xa8\xd8\xae\xd9\x8a\xd8\xaa\xd8\xac\xd9\x8a\xd8\xaa"
    "\xd8\xac\xd9\x89\xd8\xaa\xd8\xae\xd9\x8a\xd8\xaa\xd8\xae\xd9\x89\xd8\xaa"
    "\xd9\x85\xd9\x8a\xd8\xaa\xd9\x85\xd9\x89\xd8\xac\xd9\x85\xd9\x8a\xd8\xac"
    "\xd8\xad\xd9\x89\xd8\xac\xd9\x85\xd9\x89\xd8\xb3\xd8\xae\xd9\x89\xd8\xb5"
    "\xd8\xad\xd9\x8a\xd8\xb4\xd8\xad\xd9\x8a\xd8\xb6\xd8\xad\xd9\x8a\xd9\x84"
    "\xd8\xac\xd9\x8a\xd9\x84\xd9\x85\xd9\x8a\xd9\x8a\xd8\xad\xd9\x8a\xd9\x8a"
    "\xd8\xac\xd9\x8a\xd9\x8a\xd9\x85\xd9\x8a\xd9\x85\xd9\x85\xd9\x8a\xd9\x82"
    "\xd9\x85\xd9\x8a\xd9\x86\xd8\xad\xd9\x8a\xd9\x82\xd9\x85\xd8\xad\xd9\x84"
    "\xd8\xad\xd9\x85\xd8\xb9\xd9\x85\xd9\x8a\xd9\x83\xd9\x85\xd9\x8a\xd9\x86"
    "\xd8\xac\xd8\xad\xd9\x85\xd8\xae\xd9\x8a\xd9\x84\xd8\xac\xd9\x85\xd9\x83"
    "\xd9\x85\xd9\x85\xd9\x84\xd8\xac\xd9\x85\xd9\x86\xd8\xac\xd8\xad\xd8\xac"
    "\xd8\xad\xd9\x8a\xd8\xad\xd8\xac\xd9\x8a\xd9\x85\xd8\xac\xd9\x8a\xd9\x81"
    "\xd9\x85\xd9\x8a\xd8\xa8\xd8\xad\xd9\x8a\xd9\x83\xd9\x85\xd9\x85\xd8\xb9"
    "\xd8\xac\xd9\x85\xd8\xb5\xd9\x85\xd9\x85\xd8\xb3\xd8\xae\xd9\x8a\xd9\x86"
    "\xd8\xac\xd9\x8a\xd8\xb5\xd9\x84\xdb\x92\xd9\x82\xd9\x84\xdb\x92\xd8\xa7"
    "\xd9\x84\xd9\x84\xd9\x87\xd8\xa7\xd9\x83\xd8\xa8\xd8\xb1\xd9\x85\xd8\xad"
    "\xd9\x85\xd8\xaf\xd8\xb5\xd9\x84\xd8\xb9\xd9\x85\xd8\xb1\xd8\xb3\xd9\x88"
    "\xd9\x84\xd8\xb9\xd9\x84\xd9\x8a\xd9\x87\xd9\x88\xd8\xb3\xd9\x84\xd9\x85"
    "\xd8\xb5\xd9\x84\xd9\x89\xd8\xb5\xd9\x84\xd9\x89\x20\xd8\xa7\xd9\x84\xd9"
    "\x84\xd9\x87\x20\xd8\xb9\xd9\x84\xd9\x8a\xd9\x87\x20\xd9\x88\xd8\xb3\xd9"
    "\x84\xd9\x85\xd8\xac\xd9\x84\x20\xd8\xac\xd9\x84\xd8\xa7\xd9\x84\xd9\x87"
    "\xd8\xb1\xdb\x8c\xd8\xa7\xd9\x84\x2c\xe3\x80\x81\xe3\x80\x82\x3a\x3b\x21"
    "\x3f\xe3\x80\x96\xe3\x80\x97\x2e\x2e\x2e\x2e\x2e\xe2\x80\x94\xe2\x80\x93"
    "\x5f\x5f\x28\x29\x7b\x7d\xe3\x80\x94\xe3\x80\x95\xe3\x80\x90\xe3\x80\x91"
    "\xe3\x80\x8a\xe3\x80\x8b\xe3\x80\x88\xe3\x80\x89\xe3\x80\x8c\xe3\x80\x8d"
    "\xe3\x80\x8e\xe3\x80\x8f\x5b\x5d\x20\xcc\x85\x20\xcc\x85\x20\xcc\x85\x20"
    "\xcc\x85\x5f\x5f\x5f\x2c\xe3\x80\x81\x2e\x3b\x3a\x3f\x21\xe2\x80\x94\x28"
    "\x29\x7b\x7d\xe3\x80\x94\xe3\x80\x95\x23\x26\x2a\x2b\x2d\x3c\x3e\x3d\x5c"
    "\x24\x25\x40\x20\xd9\x8b\xd9\x80\xd9\x8b\x20\xd9\x8c\x20\xd9\x8d\x20\xd9"
    "\x8e\xd9\x80\xd9\x8e\x20\xd9\x8f\xd9\x80\xd9\x8f\x20\xd9\x90\xd9\x80\xd9"
    "\x90\x20\xd9\x91\xd9\x80\xd9\x91\x20\xd9\x92\xd9\x80\xd9\x92\xd8\xa1\xd8"
    "\xa2\xd8\xa2\xd8\xa3\xd8\xa3\xd8\xa4\xd8\xa4\xd8\xa5\xd8\xa5\xd8\xa6\xd8"
    "\xa6\xd8\xa6\xd8\xa6\xd8\xa7\xd8\xa7\xd8\xa8\xd8\xa8\xd8\xa8\xd8\xa8\xd8"
    "\xa9\xd8\xa9\xd8\xaa\xd8\xaa\xd8\xaa\xd8\xaa\xd8\xab\xd8\xab\xd8\xab\xd8"
    "\xab\xd8\xac\xd8\xac\xd8\xac\xd8\xac\xd8\xad\xd8\xad\xd8\xad\xd8\xad\xd8"
    "\xae\xd8\xae\xd8\xae\xd8\xae\xd8\xaf\xd8\xaf\xd8\xb0\xd8\xb0\xd8\xb1\xd8"
    "\xb1\xd8\xb2\xd8\xb2\xd8\xb3\xd8\xb3\xd8\xb3\xd8\xb3\xd8\xb4\xd8\xb4\xd8"
    "\xb4\xd8\xb4\xd8\xb5\xd8\xb5\xd8\xb5\xd8\xb5\xd8\xb6\xd8\xb6\xd8\xb6\xd8"
    "\xb6\xd8\xb7\xd8\xb7\xd8\xb7\xd8\xb7\xd8\xb8\xd8\xb8\xd8\xb8\xd8\xb8\xd8"
    "\xb9\xd8\xb9\xd8\xb9\xd8\xb9\xd8\xba\xd8\xba\xd8\xba\xd8\xba\xd9\x81\xd9"
    "\x81\xd9\x81\xd9\x81\xd9\x82\xd9\x82\xd9\x82\xd9\x82\xd9\x83\xd9\x83\xd9"
    "\x83\xd9\x83\xd9\x84\xd9\x84\xd9\x84\xd9\x84\xd9\x85\xd9\x85\xd9\x85\xd9"
    "\x85\xd9\x86\xd9\x86\xd9\x86\xd9\x86\xd9\x87\xd9\x87\xd9\x87\xd9\x87\xd9"
    "\x88\xd9\x88\xd9\x89\xd9\x89\xd9\x8a\xd9\x8a\xd9\x8a\xd9\x8a\xd9\x84\xd8"
    "\xa2\xd9\x84\xd8\xa2\xd9\x84\xd8\xa3\xd9\x84\xd8\xa3\xd9\x84\xd8\xa5\xd9"
    "\x84\xd8\xa5\xd9\x84\xd8\xa7\xd9\x84\xd8\xa7\x21\x22\x23\x24\x25\x26\x27"
    "\x28\x29\x2a\x2b\x2c\x2d\x2e\x2f\x30\x31\x32\x33\x34\x35\x36\x37\x38\x39"
    "\x3a\x3b\x3c\x3d\x3e\x3f\x40\x41\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b"
    "\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x5b\x5c\x5d"
    "\x5e\x5f\x60\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f"
    "\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x7b\x7c\x7d\x7e\xe2\xa6\x85"
    "\xe2\xa6\x86\xe3\x80\x82\xe3\x80\x8c\xe3\x80\x8d\xe3\x80\x81\xe3\x83\xbb"
    "\xe3\x83\xb2\xe3\x82\xa1\xe3\x82\xa3\xe3\x82\xa5\xe3\x82\xa7\xe3\x82\xa9"
    "\xe3\x83\xa3\xe3\x83\xa5\xe3\x83\xa7\xe3\x83\x83\xe3\x83\xbc\xe3\x82\xa2"
    "\xe3\x82\xa4\xe3\x82\xa6\xe3\x82\xa8\xe3\x82\xaa\xe3\x82\xab\xe3\x82\xad"
    "\xe3\x82\xaf\xe3\x82\xb1\xe3\x82\xb3\xe3\x82\xb5\xe3\x82\xb7\xe3\x82\xb9"
    "\xe3\x82\xbb\xe3\x82\xbd\xe3\x82\xbf\xe3\x83\x81\xe3\x83\x84\xe3\x83\x86"
    "\xe3\x83\x88\xe3\x83\x8a\xe3\x83\x8b\xe3\x83\x8c\xe3\x83\x8d\xe3\x83\x8e"
    "\xe3\x83\x8f\xe3\x83\x92\xe3\x83\x95\xe3\x83\x98\xe3\x83\x9b\xe3\x83\x9e"
    "\xe3\x83\x9f\xe3\x83\xa0\xe3\x83\xa1\xe3\x83\xa2\xe3\x83\xa4\xe3\x83\xa6"
    "\xe3\x83\xa8\xe3\x83\xa9\xe3\x83\xaa\xe3\x83\xab\xe3\x83\xac\xe3\x83\xad"
    "\xe3\x83\xaf\xe3\x83\xb3\xe3\x82\x99\xe3\x82\x9a\xe1\x85\xa0\xe1\x84\x80"
    "\xe1\x84\x81\xe1\x86\xaa\xe1\x84\x82\xe1\x86\xac\xe1\x86\xad\xe1\x84\x83"
    "\xe1\x84\x84\xe1\x84\x85\xe1\x86\xb0\xe1\x86\xb1\xe1\x86\xb2\xe1\x86\xb3"
    "\xe1\x86\xb4\xe1\x86\xb5\xe1\x84\x9a\xe1\x84\x86\xe1\x84\x87\xe1\x84\x88"
    "\xe1\x84\xa1\xe1\x84\x89\xe1\x84\x8a\xe1\x84\x8b\xe1\x84\x8c\xe1\x84\x8d"
    "\xe1\x84\x8e\xe1\x84\x8f\xe1\x84\x90\xe1\x84\x91\xe1\x84\x92\xe1\x85\xa1"
    "\xe1\x85\xa2\xe1\x85\xa3\xe1\x85\xa4\xe1\x85\xa5\xe1\x85\xa6\xe1\x85\xa7"
    "\xe1\x85\xa8\xe1\x85\xa9\xe1\x85\xaa\xe1\x85\xab\xe1\x85\xac\xe1\x85\xad"
    "\xe1\x85\xae\xe1\x85\xaf\xe1\x85\xb0\xe1\x85\xb1\xe1\x85\xb2\xe1\x85\xb3"
    "\xe1\x85\xb4\xe1\x85\xb5\xc2\xa2\xc2\xa3\xc2\xac\x20\xcc\x84\xc2\xa6\xc2"
    "\xa5\xe2\x82\xa9\xe2\x94\x82\xe2\x86\x90\xe2\x86\x91\xe2\x86\x92\xe2\x86"
    "\x93\xe2\x96\xa0\xe2\x97\x8b\xf0\x9d\x85\x97\xf0\x9d\x85\xa5\xf0\x9d\x85"
    "\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xae\xf0"
    "\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xaf\xf0\x9d\x85\x98\xf0\x9d\x85"
    "\xa5\xf0\x9d\x85\xb0\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xb1\xf0"
    "\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xb2\xf0\x9d\x86\xb9\xf0\x9d\x85"
    "\xa5\xf0\x9d\x86\xba\xf0\x9d\x85\xa5\xf0\x9d\x86\xb9\xf0\x9d\x85\xa5\xf0"
    "\x9d\x85\xae\xf0\x9d\x86\xba\xf0\x9d\x85\xa5\xf0\x9d\x85\xae\xf0\x9d\x86"
    "\xb9\xf0\x9d\x85\xa5\xf0\x9d\x85\xaf\xf0\x9d\x86\xba\xf0\x9d\x85\xa5\xf0"
    "\x9d\x85\xaf\x41\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f"
    "\x50\x51\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67"
    "\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79"
    "\x7a\x41\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51"
    "\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67\x69\x6a"
    "\x6b\x6c\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x42"
    "\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54"
    "\x55\x56\x57\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c"
    "\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x43\x44\x47"
    "\x4a\x4b\x4e\x4f\x50\x51\x53\x54\x55\x56\x57\x58\x59\x5a\x61\x62\x63\x64"
    "\x66\x68\x69\x6a\x6b\x6c\x6d\x6e\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79"
    "\x7a\x41\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51"
    "\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67\x68\x69"
    "\x6a\x6b\x6c\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41"
    "\x42\x44\x45\x46\x47\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x53\x54\x55\x56\x57"
    "\x58\x59\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f\x70"
    "\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x42\x44\x45\x46\x47\x49\x4a"
    "\x4b\x4c\x4d\x4f\x53\x54\x55\x56\x57\x58\x59\x61\x62\x63\x64\x65\x66\x67"
    "\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79"
    "\x7a\x41\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51"
    "\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67\x68\x69"
    "\x6a\x6b\x6c\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41"
    "\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53"
    "\x54\x55\x56\x57\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b"
    "\x6c\x6d\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x42\x43"
    "\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55"
    "\x56\x57\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d"
    "\x6e\x6f\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x42\x43\x44\x45"
    "\x46\x47\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55\x56\x57"
    "\x58\x59\x5a\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f"
    "\x70\x71\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x42\x43\x44\x45\x46\x47"
    "\x48\x49\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55\x56\x57\x58\x59"
    "\x5a\x61\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f\x70\x71"
    "\x72\x73\x74\x75\x76\x77\x78\x79\x7a\x41\x42\x43\x44\x45\x46\x47\x48\x49"
    "\x4a\x4b\x4c\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x61"
    "\x62\x63\x64\x65\x66\x67\x68\x69\x6a\x6b\x6c\x6d\x6e\x6f\x70\x71\x72\x73"
    "\x74\x75\x76\x77\x78\x79\x7a\xc4\xb1\xc8\xb7\xce\x91\xce\x92\xce\x93\xce"
    "\x94\xce\x95\xce\x96\xce\x97\xce\x98\xce\x99\xce\x9a\xce\x9b\xce\x9c\xce"
    "\x9d\xce\x9e\xce\x9f\xce\xa0\xce\xa1\xce\x98\xce\xa3\xce\xa4\xce\xa5\xce"
    "\xa6\xce\xa7\xce\xa8\xce\xa9\xe2\x88\x87\xce\xb1\xce\xb2\xce\xb3\xce\xb4"
    "\xce\xb5\xce\xb6\xce\xb7\xce\xb8\xce\xb9\xce\xba\xce\xbb\xce\xbc\xce\xbd"
    "\xce\xbe\xce\xbf\xcf\x80\xcf\x81\xcf\x82\xcf\x83\xcf\x84\xcf\x85\xcf\x86"
    "\xcf\x87\xcf\x88\xcf\x89\xe2\x88\x82\xce\xb5\xce\xb8\xce\xba\xcf\x86\xcf"
    "\x81\xcf\x80\xce\x91\xce\x92\xce\x93\xce\x94\xce\x95\xce\x96\xce\x97\xce"
    "\x98\xce\x99\xce\x9a\xce\x9b\xce\x9c\xce\x9d\xce\x9e\xce\x9f\xce\xa0\xce"
    "\xa1\xce\x98\xce\xa3\xce\xa4\xce\xa5\xce\xa6\xce\xa7\xce\xa8\xce\xa9\xe2"
    "\x88\x87\xce\xb1\xce\xb2\xce\xb3\xce\xb4\xce\xb5\xce\xb6\xce\xb7\xce\xb8"
    "\xce\xb9\xce\xba\xce\xbb\xce\xbc\xce\xbd\xce\xbe\xce\xbf\xcf\x80\xcf\x81"
    "\xcf\x82\xcf\x83\xcf\x84\xcf\x85\xcf\x86\xcf\x87\xcf\x88\xcf\x89\xe2\x88"
    "\x82\xce\xb5\xce\xb8\xce\xba\xcf\x86\xcf\x81\xcf\x80\xce\x91\xce\x92\xce"
    "\x93\xce\x94\xce\x95\xce\x96\xce\x97\xce\x98\xce\x99\xce\x9a\xce\x9b\xce"
    "\x9c\xce\x9d\xce\x9e\xce\x9f\xce\xa0\xce\xa1\xce\x98\xce\xa3\xce\xa4\xce"
    "\xa5\xce\xa6\xce\xa7\xce\xa8\xce\xa9\xe2\x88\x87\xce\xb1\xce\xb2\xce\xb3"
    "\xce\xb4\xce\xb5\xce\xb6\xce\xb7\xce\xb8\xce\xb9\xce\xba\xce\xbb\xce\xbc"
    "\xce\xbd\xce\xbe\xce\xbf\xcf\x80\xcf\x81\xcf\x82\xcf\x83\xcf\x84\xcf\x85"
    "\xcf\x86\xcf\x87\xcf\x88\xcf\x89\xe2\x88\x82\xce\xb5\xce\xb8\xce\xba\xcf"
    "\x86\xcf\x81\xcf\x80\xce\x91\xce\x92\xce\x93\xce\x94\xce\x95\xce\x96\xce"
    "\x97\xce\x98\xce\x99\xce\x9a\xce\x9b\xce\x9c\xce\x9d\xce\x9e\xce\x9f\xce"
    "\xa0\xce\xa1\xce\x98\xce\xa3\xce\xa4\xce\xa5\xce\xa6\xce\xa7\xce\xa8\xce"
    "\xa9\xe2\x88\x87\xce\xb1\xce\xb2\xce\xb3\xce\xb4\xce\xb5\xce\xb6\xce\xb7"
    "\xce\xb8\xce\xb9\xce\xba\xce\xbb\xce\xbc\xce\xbd\xce\xbe\xce\xbf\xcf\x80"
    "\xcf\x81\xcf\x82\xcf\x83\xcf\x84\xcf\x85\xcf\x86\xcf\x87\xcf\x88\xcf\x89"
    "\xe2\x88\x82\xce\xb5\xce\xb8\xce\xba\xcf\x86\xcf\x81\xcf\x80\xce\x91\xce"
    "\x92\xce\x93\xce\x94\xce\x95\xce\x96\xce\x97\xce\x98\xce\x99\xce\x9a\xce"
    "\x9b\xce\x9c\xce\x9d\xce\x9e\xce\x9f\xce\xa0\xce\xa1\xce\x98\xce\xa3\xce"
    "\xa4\xce\xa5\xce\xa6\xce\xa7\xce\xa8\xce\xa9\xe2\x88\x87\xce\xb1\xce\xb2"
    "\xce\xb3\xce\xb4\xce\xb5\xce\xb6\xce\xb7\xce\xb8\xce\xb9\xce\xba\xce\xbb"
    "\xce\xbc\xce\xbd\xce\xbe\xce\xbf\xcf\x80\xcf\x81\xcf\x82\xcf\x83\xcf\x84"
    "\xcf\x85\xcf\x86\xcf\x87\xcf\x88\xcf\x89\xe2\x88\x82\xce\xb5\xce\xb8\xce"
    "\xba\xcf\x86\xcf\x81\xcf\x80\xcf\x9c\xcf\x9d\x30\x31\x32\x33\x34\x35\x36"
    "\x37\x38\x39\x30\x31\x32\x33\x34\x35\x36\x37\x38\x39\x30\x31\x32\x33\x34"
    "\x35\x36\x37\x38\x39\x30\x31\x32\x33\x34\x35\x36\x37\x38\x39\x30\x31\x32"
    "\x33\x34\x35\x36\x37\x38\x39\xd8\xa7\xd8\xa8\xd8\xac\xd8\xaf\xd9\x88\xd8"
    "\xb2\xd8\xad\xd8\xb7\xd9\x8a\xd9\x83\xd9\x84\xd9\x85\xd9\x86\xd8\xb3\xd8"
    "\xb9\xd9\x81\xd8\xb5\xd9\x82\xd8\xb1\xd8\xb4\xd8\xaa\xd8\xab\xd8\xae\xd8"
    "\xb0\xd8\xb6\xd8\xb8\xd8\xba\xd9\xae\xda\xba\xda\xa1\xd9\xaf\xd8\xa8\xd8"
    "\xac\xd9\x87\xd8\xad\xd9\x8a\xd9\x83\xd9\x84\xd9\x85\xd9\x86\xd8\xb3\xd8"
    "\xb9\xd9\x81\xd8\xb5\xd9\x82\xd8\xb4\xd8\xaa\xd8\xab\xd8\xae\xd8\xb6\xd8"
    "\xba\xd8\xac\xd8\xad\xd9\x8a\xd9\x84\xd9\x86\xd8\xb3\xd8\xb9\xd8\xb5\xd9"
    "\x82\xd8\xb4\xd8\xae\xd8\xb6\xd8\xba\xda\xba\xd9\xaf\xd8\xa8\xd8\xac\xd9"
    "\x87\xd8\xad\xd8\xb7\xd9\x8a\xd9\x83\xd9\x85\xd9\x86\xd8\xb3\xd8\xb9\xd9"
    "\x81\xd8\xb5\xd9\x82\xd8\xb4\xd8\xaa\xd8\xab\xd8\xae\xd8\xb6\xd8\xb8\xd8"
    "\xba\xd9\xae\xda\xa1\xd8\xa7\xd8\xa8\xd8\xac\xd8\xaf\xd9\x87\xd9\x88\xd8"
    "\xb2\xd8\xad\xd8\xb7\xd9\x8a\xd9\x84\xd9\x85\xd9\x86\xd8\xb3\xd8\xb9\xd9"
    "\x81\xd8\xb5\xd9\x82\xd8\xb1\xd8\xb4\xd8\xaa\xd8\xab\xd8\xae\xd8\xb0\xd8"
    "\xb6\xd8\xb8\xd8\xba\xd8\xa8\xd8\xac\xd8\xaf\xd9\x88\xd8\xb2\xd8\xad\xd8"
    "\xb7\xd9\x8a\xd9\x84\xd9\x85\xd9\x86\xd8\xb3\xd8\xb9\xd9\x81\xd8\xb5\xd9"
    "\x82\xd8\xb1\xd8\xb4\xd8\xaa\xd8\xab\xd8\xae\xd8\xb0\xd8\xb6\xd8\xb8\xd8"
    "\xba\x30\x2e\x30\x2c\x31\x2c\x32\x2c\x33\x2c\x34\x2c\x35\x2c\x36\x2c\x37"
    "\x2c\x38\x2c\x39\x2c\x28\x41\x29\x28\x42\x29\x28\x43\x29\x28\x44\x29\x28"
    "\x45\x29\x28\x46\x29\x28\x47\x29\x28\x48\x29\x28\x49\x29\x28\x4a\x29\x28"
    "\x4b\x29\x28\x4c\x29\x28\x4d\x29\x28\x4e\x29\x28\x4f\x29\x28\x50\x29\x28"
    "\x51\x29\x28\x52\x29\x28\x53\x29\x28\x54\x29\x28\x55\x29\x28\x56\x29\x28"
    "\x57\x29\x28\x58\x29\x28\x59\x29\x28\x5a\x29\xe3\x80\x94\x53\xe3\x80\x95"
    "\x43\x52\x43\x44\x57\x5a\x41\x42\x43\x44\x45\x46\x47\x48\x49\x4a\x4b\x4c"
    "\x4d\x4e\x4f\x50\x51\x52\x53\x54\x55\x56\x57\x58\x59\x5a\x48\x56\x4d\x56"
    "\x53\x44\x53\x53\x50\x50\x56\x57\x43\x4d\x43\x4d\x44\x4d\x52\x44\x4a\xe3"
    "\x81\xbb\xe3\x81\x8b\xe3\x82\xb3\xe3\x82\xb3\xe3\x82\xb5\xe6\x89\x8b\xe5"
    "\xad\x97\xe5\x8f\x8c\xe3\x83\x87\xe4\xba\x8c\xe5\xa4\x9a\xe8\xa7\xa3\xe5"
    "\xa4\xa9\xe4\xba\xa4\xe6\x98\xa0\xe7\x84\xa1\xe6\x96\x99\xe5\x89\x8d\xe5"
    "\xbe\x8c\xe5\x86\x8d\xe6\x96\xb0\xe5\x88\x9d\xe7\xb5\x82\xe7\x94\x9f\xe8"
    "\xb2\xa9\xe5\xa3\xb0\xe5\x90\xb9\xe6\xbc\x94\xe6\x8a\x95\xe6\x8d\x95\xe4"
    "\xb8\x80\xe4\xb8\x89\xe9\x81\x8a\xe5\xb7\xa6\xe4\xb8\xad\xe5\x8f\xb3\xe6"
    "\x8c\x87\xe8\xb5\xb0\xe6\x89\x93\xe7\xa6\x81\xe7\xa9\xba\xe5\x90\x88\xe6"
    "\xba\x80\xe6\x9c\x89\xe6\x9c\x88\xe7\x94\xb3\xe5\x89\xb2\xe5\x96\xb6\xe9"
    "\x85\x8d\xe3\x80\x94\xe6\x9c\xac\xe3\x80\x95\xe3\x80\x94\xe4\xb8\x89\xe3"
    "\x80\x95\xe3\x80\x94\xe4\xba\x8c\xe3\x80\x95\xe3\x80\x94\xe5\xae\x89\xe3"
    "\x80\x95\xe3\x80\x94\xe7\x82\xb9\xe3\x80\x95\xe3\x80\x94\xe6\x89\x93\xe3"
    "\x80\x95\xe3\x80\x94\xe7\x9b\x97\xe3\x80\x95\xe3\x80\x94\xe5\x8b\x9d\xe3"
    "\x80\x95\xe3\x80\x94\xe6\x95\x97\xe3\x80\x95\xe5\xbe\x97\xe5\x8f\xaf\x30"
    "\x31\x32\x33\x34\x35\x36\x37\x38\x39\xe4\xb8\xbd\xe4\xb8\xb8\xe4\xb9\x81"
    "\xf0\xa0\x84\xa2\xe4\xbd\xa0\xe4\xbe\xae\xe4\xbe\xbb\xe5\x80\x82\xe5\x81"
    "\xba\xe5\x82\x99\xe5\x83\xa7\xe5\x83\x8f\xe3\x92\x9e\xf0\xa0\x98\xba\xe5"
    "\x85\x8d\xe5\x85\x94\xe5\x85\xa4\xe5\x85\xb7\xf0\xa0\x94\x9c\xe3\x92\xb9"
    "\xe5\x85\xa7\xe5\x86\x8d\xf0\xa0\x95\x8b\xe5\x86\x97\xe5\x86\xa4\xe4\xbb"
    "\x8c\xe5\x86\xac\xe5\x86\xb5\xf0\xa9\x87\x9f\xe5\x87\xb5\xe5\x88\x83\xe3"
    "\x93\x9f\xe5\x88\xbb\xe5\x89\x86\xe5\x89\xb2\xe5\x89\xb7\xe3\x94\x95\xe5"
    "\x8b\x87\xe5\x8b\x89\xe5\x8b\xa4\xe5\x8b\xba\xe5\x8c\x85\xe5\x8c\x86\xe5"
    "\x8c\x97\xe5\x8d\x89\xe5\x8d\x91\xe5\x8d\x9a\xe5\x8d\xb3\xe5\x8d\xbd\xe5"
    "\x8d\xbf\xe5\x8d\xbf\xe5\x8d\xbf\xf0\xa0\xa8\xac\xe7\x81\xb0\xe5\x8f\x8a"
    "\xe5\x8f\x9f\xf0\xa0\xad\xa3\xe5\x8f\xab\xe5\x8f\xb1\xe5\x90\x86\xe5\x92"
    "\x9e\xe5\x90\xb8\xe5\x91\x88\xe5\x91\xa8\xe5\x92\xa2\xe5\x93\xb6\xe5\x94"
    "\x90\xe5\x95\x93\xe5\x95\xa3\xe5\x96\x84\xe5\x96\x84\xe5\x96\x99\xe5\x96"
    "\xab\xe5\x96\xb3\xe5\x97\x82\xe5\x9c\x96\xe5\x98\x86\xe5\x9c\x97\xe5\x99"
    "\x91\xe5\x99\xb4\xe5\x88\x87\xe5\xa3\xae\xe5\x9f\x8e\xe5\x9f\xb4\xe5\xa0"
    "\x8d\xe5\x9e\x8b\xe5\xa0\xb2\xe5\xa0\xb1\xe5\xa2\xac\xf0\xa1\x93\xa4\xe5"
    "\xa3\xb2\xe5\xa3\xb7\xe5\xa4\x86\xe5\xa4\x9a\xe5\xa4\xa2\xe5\xa5\xa2\xf0"
    "\xa1\x9a\xa8\xf0\xa1\x9b\xaa\xe5\xa7\xac\xe5\xa8\x9b\xe5\xa8\xa7\xe5\xa7"
    "\x98\xe5\xa9\xa6\xe3\x9b\xae\xe3\x9b\xbc\xe5\xac\x88\xe5\xac\xbe\xe5\xac"
    "\xbe\xf0\xa1\xa7\x88\xe5\xaf\x83\xe5\xaf\x98\xe5\xaf\xa7\xe5\xaf\xb3\xf0"
    "\xa1\xac\x98\xe5\xaf\xbf\xe5\xb0\x86\xe5\xbd\x93\xe5\xb0\xa2\xe3\x9e\x81"
    "\xe5\xb1\xa0\xe5\xb1\xae\xe5\xb3\x80\xe5\xb2\x8d\xf0\xa1\xb7\xa4\xe5\xb5"
    "\x83\xf0\xa1\xb7\xa6\xe5\xb5\xae\xe5\xb5\xab\xe5\xb5\xbc\xe5\xb7\xa1\xe5"
    "\xb7\xa2\xe3\xa0\xaf\xe5\xb7\xbd\xe5\xb8\xa8\xe5\xb8\xbd\xe5\xb9\xa9\xe3"
    "\xa1\xa2\xf0\xa2\x86\x83\xe3\xa1\xbc\xe5\xba\xb0\xe5\xba\xb3\xe5\xba\xb6"
    "\xe5\xbb\x8a\xf0\xaa\x8e\x92\xe5\xbb\xbe\xf0\xa2\x8c\xb1\xf0\xa2\x8c\xb1"
    "\xe8\x88\x81\xe5\xbc\xa2\xe5\xbc\xa2\xe3\xa3\x87\xf0\xa3\x8a\xb8\xf0\xa6"
    "\x87\x9a\xe5\xbd\xa2\xe5\xbd\xab\xe3\xa3\xa3\xe5\xbe\x9a\xe5\xbf\x8d\xe5"
    "\xbf\x97\xe5\xbf\xb9\xe6\x82\x81\xe3\xa4\xba\xe3\xa4\x9c\xe6\x82\x94\xf0"
    "\xa2\x9b\x94\xe6\x83\x87\xe6\x85\x88\xe6\x85\x8c\xe6\x85\x8e\xe6\x85\x8c"
    "\xe6\x85\xba\xe6\x86\x8e\xe6\x86\xb2\xe6\x86\xa4\xe6\x86\xaf\xe6\x87\x9e"
    "\xe6\x87\xb2\xe6\x87\xb6\xe6\x88\x90\xe6\x88\x9b\xe6\x89\x9d\xe6\x8a\xb1"
    "\xe6\x8b\x94\xe6\x8d\x90\xf0\xa2\xac\x8c\xe6\x8c\xbd\xe6\x8b\xbc\xe6\x8d"
    "\xa8\xe6\x8e\x83\xe6\x8f\xa4\xf0\xa2\xaf\xb1\xe6\x90\xa2\xe6\x8f\x85\xe6"
    "\x8e\xa9\xe3\xa8\xae\xe6\x91\xa9\xe6\x91\xbe\xe6\x92\x9d\xe6\x91\xb7\xe3"
    "\xa9\xac\xe6\x95\x8f\xe6\x95\xac\xf0\xa3\x80\x8a\xe6\x97\xa3\xe6\x9b\xb8"
    "\xe6\x99\x89\xe3\xac\x99\xe6\x9a\x91\xe3\xac\x88\xe3\xab\xa4\xe5\x86\x92"
    "\xe5\x86\x95\xe6\x9c\x80\xe6\x9a\x9c\xe8\x82\xad\xe4\x8f\x99\xe6\x9c\x97"
    "\xe6\x9c\x9b\xe6\x9c\xa1\xe6\x9d\x9e\xe6\x9d\x93\xf0\xa3\x8f\x83\xe3\xad"
    "\x89\xe6\x9f\xba\xe6\x9e\x85\xe6\xa1\x92\xe6\xa2\x85\xf0\xa3\x91\xad\xe6"
    "\xa2\x8e\xe6\xa0\x9f\xe6\xa4\x94\xe3\xae\x9d\xe6\xa5\x82\xe6\xa6\xa3\xe6"
    "\xa7\xaa\xe6\xaa\xa8\xf0\xa3\x9a\xa3\xe6\xab\x9b\xe3\xb0\x98\xe6\xac\xa1"
    "\xf0\xa3\xa2\xa7\xe6\xad\x94\xe3\xb1\x8e\xe6\xad\xb2\xe6\xae\x9f\xe6\xae"
    "\xba\xe6\xae\xbb\xf0\xa3\xaa\x8d\xf0\xa1\xb4\x8b\xf0\xa3\xab\xba\xe6\xb1"
    "\x8e\xf0\xa3\xb2\xbc\xe6\xb2\xbf\xe6\xb3\x8d\xe6\xb1\xa7\xe6\xb4\x96\xe6"
    "\xb4\xbe\xe6\xb5\xb7\xe6\xb5\x81\xe6\xb5\xa9\xe6\xb5\xb8\xe6\xb6\x85\xf0"
    "\xa3\xb4\x9e\xe6\xb4\xb4\xe6\xb8\xaf\xe6\xb9\xae\xe3\xb4\xb3\xe6\xbb\x8b"
    "\xe6\xbb\x87\xf0\xa3\xbb\x91\xe6\xb7\xb9\xe6\xbd\xae\xf0\xa3\xbd\x9e\xf0"
    "\xa3\xbe\x8e\xe6\xbf\x86\xe7\x80\xb9\xe7\x80\x9e\xe7\x80\x9b\xe3\xb6\x96"
    "\xe7\x81\x8a\xe7\x81\xbd\xe7\x81\xb7\xe7\x82\xad\xf0\xa0\x94\xa5\xe7\x85"
    "\x85\xf0\xa4\x89\xa3\xe7\x86\x9c\xf0\xa4\x8e\xab\xe7\x88\xa8\xe7\x88\xb5"
    "\xe7\x89\x90\xf0\xa4\x98\x88\xe7\x8a\x80\xe7\x8a\x95\xf0\xa4\x9c\xb5\xf0"
    "\xa4\xa0\x94\xe7\x8d\xba\xe7\x8e\x8b\xe3\xba\xac\xe7\x8e\xa5\xe3\xba\xb8"
    "\xe3\xba\xb8\xe7\x91\x87\xe7\x91\x9c\xe7\x91\xb1\xe7\x92\x85\xe7\x93\x8a"
    "\xe3\xbc\x9b\xe7\x94\xa4\xf0\xa4\xb0\xb6\xe7\x94\xbe\xf0\xa4\xb2\x92\xe7"
    "\x95\xb0\xf0\xa2\x86\x9f\xe7\x98\x90\xf0\xa4\xbe\xa1\xf0\xa4\xbe\xb8\xf0"
    "\xa5\x81\x84\xe3\xbf\xbc\xe4\x80\x88\xe7\x9b\xb4\xf0\xa5\x83\xb3\xf0\xa5"
    "\x83\xb2\xf0\xa5\x84\x99\xf0\xa5\x84\xb3\xe7\x9c\x9e\xe7\x9c\x9f\xe7\x9c"
    "\x9f\xe7\x9d\x8a\xe4\x80\xb9\xe7\x9e\x8b\xe4\x81\x86\xe4\x82\x96\xf0\xa5"
    "\x90\x9d\xe7\xa1\x8e\xe7\xa2\x8c\xe7\xa3\x8c\xe4\x83\xa3\xf0\xa5\x98\xa6"
    "\xe7\xa5\x96\xf0\xa5\x9a\x9a\xf0\xa5\x9b\x85\xe7\xa6\x8f\xe7\xa7\xab\xe4"
    "\x84\xaf\xe7\xa9\x80\xe7\xa9\x8a\xe7\xa9\x8f\xf0\xa5\xa5\xbc\xf0\xa5\xaa"
    "\xa7\xf0\xa5\xaa\xa7\xe7\xab\xae\xe4\x88\x82\xf0\xa5\xae\xab\xe7\xaf\x86"
    "\xe7\xaf\x89\xe4\x88\xa7\xf0\xa5\xb2\x80\xe7\xb3\x92\xe4\x8a\xa0\xe7\xb3"
    "\xa8\xe7\xb3\xa3\xe7\xb4\x80\xf0\xa5\xbe\x86\xe7\xb5\xa3\xe4\x8c\x81\xe7"
    "\xb7\x87\xe7\xb8\x82\xe7\xb9\x85\xe4\x8c\xb4\xf0\xa6\x88\xa8\xf0\xa6\x89"
    "\x87\xe4\x8d\x99\xf0\xa6\x8b\x99\xe7\xbd\xba\xf0\xa6\x8c\xbe\xe7\xbe\x95"
    "\xe7\xbf\xba\xe8\x80\x85\xf0\xa6\x93\x9a\xf0\xa6\x94\xa3\xe8\x81\xa0\xf0"
    "\xa6\x96\xa8\xe8\x81\xb0\xf0\xa3\x8d\x9f\xe4\x8f\x95\xe8\x82\xb2\xe8\x84"
    "\x83\xe4\x90\x8b\xe8\x84\xbe\xe5\xaa\xb5\xf0\xa6\x9e\xa7\xf0\xa6\x9e\xb5"
    "\xf0\xa3\x8e\x93\xf0\xa3\x8e\x9c\xe8\x88\x81\xe8\x88\x84\xe8\xbe\x9e\xe4"
    "\x91\xab\xe8\x8a\x91\xe8\x8a\x8b\xe8\x8a\x9d\xe5\x8a\xb3\xe8\x8a\xb1\xe8"
    "\x8a\xb3\xe8\x8a\xbd\xe8\x8b\xa6\xf0\xa6\xac\xbc\xe8\x8b\xa5\xe8\x8c\x9d"
    "\xe8\x8d\xa3\xe8\x8e\xad\xe8\x8c\xa3\xe8\x8e\xbd\xe8\x8f\xa7\xe8\x91\x97"
    "\xe8\x8d\x93\xe8\x8f\x8a\xe8\x8f\x8c\xe8\x8f\x9c\xf0\xa6\xb0\xb6\xf0\xa6"
    "\xb5\xab\xf0\xa6\xb3\x95\xe4\x94\xab\xe8\x93\xb1\xe8\x93\xb3\xe8\x94\x96"
    "\xf0\xa7\x8f\x8a\xe8\x95\xa4\xf0\xa6\xbc\xac\xe4\x95\x9d\xe4\x95\xa1\xf0"
    "\xa6\xbe\xb1\xf0\xa7\x83\x92\xe4\x95\xab\xe8\x99\x90\xe8\x99\x9c\xe8\x99"
    "\xa7\xe8\x99\xa9\xe8\x9a\xa9\xe8\x9a\x88\xe8\x9c\x8e\xe8\x9b\xa2\xe8\x9d"
    "\xb9\xe8\x9c\xa8\xe8\x9d\xab\xe8\x9e\x86\xe4\x97\x97\xe8\x9f\xa1\xe8\xa0"
    "\x81\xe4\x97\xb9\xe8\xa1\xa0\xe8\xa1\xa3\xf0\xa7\x99\xa7\xe8\xa3\x97\xe8"
    "\xa3\x9e\xe4\x98\xb5\xe8\xa3\xba\xe3\x92\xbb\xf0\xa7\xa2\xae\xf0\xa7\xa5"
    "\xa6\xe4\x9a\xbe\xe4\x9b\x87\xe8\xaa\xa0\xe8\xab\xad\xe8\xae\x8a\xe8\xb1"
    "\x95\xf0\xa7\xb2\xa8\xe8\xb2\xab\xe8\xb3\x81\xe8\xb4\x9b\xe8\xb5\xb7\xf0"
    "\xa7\xbc\xaf\xf0\xa0\xa0\x84\xe8\xb7\x8b\xe8\xb6\xbc\xe8\xb7\xb0\xf0\xa0"
    "\xa3\x9e\xe8\xbb\x94\xe8\xbc\xb8\xf0\xa8\x97\x92\xf0\xa8\x97\xad\xe9\x82"
    "\x94\xe9\x83\xb1\xe9\x84\x91\xf0\xa8\x9c\xae\xe9\x84\x9b\xe9\x88\xb8\xe9"
    "\x8b\x97\xe9\x8b\x98\xe9\x89\xbc\xe9\x8f\xb9\xe9\x90\x95\xf0\xa8\xaf\xba"
    "\xe9\x96\x8b\xe4\xa6\x95\xe9\x96\xb7\xf0\xa8\xb5\xb7\xe4\xa7\xa6\xe9\x9b"
    "\x83\xe5\xb6\xb2\xe9\x9c\xa3\xf0\xa9\x85\x85\xf0\xa9\x88\x9a\xe4\xa9\xae"
    "\xe4\xa9\xb6\xe9\x9f\xa0\xf0\xa9\x90\x8a\xe4\xaa\xb2\xf0\xa9\x92\x96\xe9"
    "\xa0\x8b\xe9\xa0\x8b\xe9\xa0\xa9\xf0\xa9\x96\xb6\xe9\xa3\xa2\xe4\xac\xb3"
    "\xe9\xa4\xa9\xe9\xa6\xa7\xe9\xa7\x82\xe9\xa7\xbe\xe4\xaf\x8e\xf0\xa9\xac"
    "\xb0\xe9\xac\x92\xe9\xb1\x80\xe9\xb3\xbd\xe4\xb3\x8e\xe4\xb3\xad\xe9\xb5"
    "\xa7\xf0\xaa\x83\x8e\xe4\xb3\xb8\xf0\xaa\x84\x85\xf0\xaa\x88\x8e\xf0\xaa"
    "\x8a\x91\xe9\xba\xbb\xe4\xb5\x96\xe9\xbb\xb9\xe9\xbb\xbe\xe9\xbc\x85\xe9"
    "\xbc\x8f\xe9\xbc\x96\xe9\xbc\xbb\xf0\xaa\x98\x80"
;

// Inclusive codepoint ranges with general category Cf.
const CpRange kCfRanges[] = {
    {0xAD,0xAD},{0x600,0x605},{0x61C,0x61C},{0x6DD,0x6DD},{0x70F,0x70F},{0x8E2,0x8E2},
    {0x180E,0x180E},{0x200B,0x200F},{0x202A,0x202E},{0x2060,0x2064},{0x2066,0x206F},{0xFEFF,0xFEFF},
    {0xFFF9,0xFFFB},{0x110BD,0x110BD},{0x110CD,0x110CD},{0x13430,0x13438},{0x1BCA0,0x1BCA3},{0x1D173,0x1D17A},
    {0xE0001,0xE0001},{0xE0020,0xE007F},
};
const std::size_t kCfRangesSize = sizeof(kCfRanges) / sizeof(kCfRanges[0]);

// Simple (single-codepoint) lowercase mappings.
const LowerEntry kLowerMap[] = {
    {0x41,0x61},{0x42,0x62},{0x43,0x63},{0x44,0x64},{0x45,0x65},{0x46,0x66},{0x47,0x67},{0x48,0x68},
    {0x49,0x69},{0x4A,0x6A},{0x4B,0x6B},{0x4C,0x6C},{0x4D,0x6D},{0x4E,0x6E},{0x4F,0x6F},{0x50,0x70},
    {0x51,0x71},{0x52,0x72},{0x53,0x73},{0x54,0x74},{0x55,0x75},{0x56,0x76},{0x57,0x77},{0x58,0x78},
    {0x59,0x79},{0x5A,0x7A},{0xC0,0xE0},{0xC1,0xE1},{0xC2,0xE2},{0xC3,0xE3},{0xC4,0xE4},{0xC5,0xE5},
    {0xC6,0xE6},{0xC7,0xE7},{0xC8,0xE8},{0xC9,0xE9},{0xCA,0xEA},{0xCB,0xEB},{0xCC,0xEC},{0xCD,0xED},
    {0xCE,0xEE},{0xCF,0xEF},{0xD0,0xF0},{0xD1,0xF1},{0xD2,0xF2},{0xD3,0xF3},{0xD4,0xF4},{0xD5,0xF5},
    {0xD6,0xF6},{0xD8,0xF8},{0xD9,0xF9},{0xDA,0xFA},{0xDB,0xFB},{0xDC,0xFC},{0xDD,0xFD},{0xDE,0xFE},
    {0x100,0x101},{0x102,0x103},{0x104,0x105},{0x106,0x107},{0x108,0x109},{0x10A,0x10B},{0x10C,0x10D},{0x10E,0x10F},
    {0x110,0x111},{0x112,0x113},{0x114,0x115},{0x116,0x117},{0x118,0x119},{0x11A,0x11B},{0x11C,0x11D},{0x11E,0x11F},
    {0x120,0x121},{0x122,0x123},{0x124,0x125},{0x126,0x127},{0x128,0x129},{0x12A,0x12B},{0x12C,0x12D},{0x12E,0x12F},
    {0x132,0x133},{0x134,0x135},{0x136,0x137},{0x139,0x13A},{0x13B,0x13C},{0x13D,0x13E},{0x13F,0x140},{0x141,0x142},
    {0x143,0x144},{0x145,0x146},{0x147,0x148},{0x14A,0x14B},{0x14C,0x14D},{0x14E,0x14F},{0x150,0x151},{0x152,0x153},
    {0x154,0x155},{0x156,0x157},{0x158,0x159},{0x15A,0x15B},{0x15C,0x15D},{0x15E,0x15F},{0x160,0x161},{0x162,0x163},
    {0x164,0x165},{0x166,0x167},{0x168,0x169},{0x16A,0x16B},{0x16C,0x16D},{0x16E,0x16F},{0x170,0x171},{0x172,0x173},
    {0x174,0x175},{0x176,0x177},{0x178,0xFF},{0x179,0x17A},{0x17B,0x17C},{0x17D,0x17E},{0x181,0x253},{0x182,0x183},
    {0x184,0x185},{0x186,0x254},{0x187,0x188},{0x189,0x256},{0x18A,0x257},{0x18B,0x18C},{0x18E,0x1DD},{0x18F,0x259},
    {0x190,0x25B},{0x191,0x192},{0x193,0x260},{0x194,0x263},{0x196,0x269},{0x197,0x268},{0x198,0x199},{0x19C,0x26F},
    {0x19D,0x272},{0x19F,0x275},{0x1A0,0x1A1},{0x1A2,0x1A3},{0x1A4,0x1A5},{0x1A6,0x280},{0x1A7,0x1A8},{0x1A9,0x283},
    {0x1AC,0x1AD},{0x1AE,0x288},{0x1AF,0x1B0},{0x1B1,0x28A},{0x1B2,0x28B},{0x1B3,0x1B4},{0x1B5,0x1B6},{0x1B7,0x292},
    {0x1B8,0x1B9},{0x1BC,0x1BD},{0x1C4,0x1C6},{0x1C5,0x1C6},{0x1C7,0x1C9},{0x1C8,0x1C9},{0x1CA,0x1CC},{0x1CB,0x1CC},
    {0x1CD,0x1CE},{0x1CF,0x1D0},{0x1D1,0x1D2},{0x1D3,0x1D4},{0x1D5,0x1D6},{0x1D7,0x1D8},{0x1D9,0x1DA},{0x1DB,0x1DC},
    {0x1DE,0x1DF},{0x1E0,0x1E1},{0x1E2,0x1E3},{0x1E4,0x1E5},{0x1E6,0x1E7},{0x1E8,0x1E9},{0x1EA,0x1EB},{0x1EC,0x1ED},
    {0x1EE,0x1EF},{0x1F1,0x1F3},{0x1F2,0x1F3},{0x1F4,0x1F5},{0x1F6,0x195},{0x1F7,0x1BF},{0x1F8,0x1F9},{0x1FA,0x1FB},
    {0x1FC,0x1FD},{0x1FE,0x1FF},{0x200,0x201},{0x202,0x203},{0x204,0x205},{0x206,0x207},{0x208,0x209},{0x20A,0x20B},
    {0x20C,0x20D},{0x20E,0x20F},{0x210,0x211},{0x212,0x213},{0x214,0x215},{0x216,0x217},{0x218,0x219},{0x21A,0x21B},
    {0x21C,0x21D},{0x21E,0x21F},{0x220,0x19E},{0x222,0x223},{0x224,0x225},{0x226,0x227},{0x228,0x229},{0x22A,0x22B},
    {0x22C,0x22D},{0x22E,0x22F},{0x230,0x231},{0x232,0x233},{0x23A,0x2C65},{0x23B,0x23C},{0x23D,0x19A},{0x23E,0x2C66},
    {0x241,0x242},{0x243,0x180},{0x244,0x289},{0x245,0x28C},{0x246,0x247},{0x248,0x249},{0x24A,0x24B},{0x24C,0x24D},
    {0x24E,0x24F},{0x370,0x371},{0x372,0x373},{0x376,0x377},{0x37F,0x3F3},{0x386,0x3AC},{0x388,0x3AD},{0x389,0x3AE},
    {0x38A,0x3AF},{0x38C,0x3CC},{0x38E,0x3CD},{0x38F,0x3CE},{0x391,0x3B1},{0x392,0x3B2},{0x393,0x3B3},{0x394,0x3B4},
    {0x395,0x3B5},{0x396,0x3B6},{0x397,0x3B7},{0x398,0x3B8},{0x399,0x3B9},{0x39A,0x3BA},{0x39B,0x3BB},{0x39C,0x3BC},
    {0x39D,0x3BD},{0x39E,0x3BE},{0x39F,0x3BF},{0x3A0,0x3C0},{0x3A1,0x3C1},{0x3A3,0x3C3},{0x3A4,0x3C4},{0x3A5,0x3C5},
    {0x3A6,0x3C6},{0x3A7,0x3C7},{0x3A8,0x3C8},{0x3A9,0x3C9},{0x3AA,0x3CA},{0x3AB,0x3CB},{0x3CF,0x3D7},{0x3D8,0x3D9},
    {0x3DA,0x3DB},{0x3DC,0x3DD},{0x3DE,0x3DF},{0x3E0,0x3E1},{0x3E2,0x3E3},{0x3E4,0x3E5},{0x3E6,0x3E7},{0x3E8,0x3E9},
    {0x3EA,0x3EB},{0x3EC,0x3ED},{0x3EE,0x3EF},{0x3F4,0x3B8},{0x3F7,0x3F8},{0x3F9,0x3F2},{0x3FA,0x3FB},{0x3FD,0x37B},
    {0x3FE,0x37C},{0x3FF,0x37D},{0x400,0x450},{0x401,0x451},{0x402,0x452},{0x403,0x453},{0x404,0x454},{0x405,0x455},
    {0x406,0x456},{0x407,0x457},{0x408,0x458},{0x409,0x459},{0x40A,0x45A},{0x40B,0x45B},{0x40C,0x45C},{0x40D,0x45D},
    {0x40E,0x45E},{0x40F,0x45F},{0x410,0x430},{0x411,0x431},{0x412,0x432},{0x413,0x433},{0x414,0x434},{0x415,0x435},
    {0x416,0x436},{0x417,0x437},{0x418,0x438},{0x419,0x439},{0x41A,0x43A},{0x41B,0x43B},{0x41C,0x43C},{0x41D,0x43D},
    {0x41E,0x43E},{0x41F,0x43F},{0x420,0x440},{0x421,0x441},{0x422,0x442},{0x423,0x443},{0x424,0x444},{0x425,0x445},
    {0x426,0x446},{0x427,0x447},{0x428,0x448},{0x429,0x449},{0x42A,0x44A},{0x42B,0x44B},{0x42C,0x44C},{0x42D,0x44D},
    {0x42E,0x44E},{0x42F,0x44F},{0x460,0x461},{0x462,0x463},{0x464,0x465},{0x466,0x467},{0x468,0x469},{0x46A,0x46B},
    {0x46C,0x46D},{0x46E,0x46F},{0x470,0x471},{0x472,0x473},{0x474,0x475},{0x476,0x477},{0x478,0x479},{0x47A,0x47B},
    {0x47C,0x47D},{0x47E,0x47F},{0x480,0x481},{0x48A,0x48B},{0x48C,0x48D},{0x48E,0x48F},{0x490,0x491},{0x492,0x493},
    {0x494,0x495},{0x496,0x497},{0x498,0x499},{0x49A,0x49B},{0x49C,0x49D},{0x49E,0x49F},{0x4A0,0x4A1},{0x4A2,0x4A3},
    {0x4A4,0x4A5},{0x4A6,0x4A7},{0x4A8,0x4A9},{0x4AA,0x4AB},{0x4AC,0x4AD},{0x4AE,0x4AF},{0x4B0,0x4B1},{0x4B2,0x4B3},
    {0x4B4,0x4B5},{0x4B6,0x4B7},{0x4B8,0x4B9},{0x4BA,0x4BB},{0x4BC,0x4BD},{0x4BE,0x4BF},{0x4C0,0x4CF},{0x4C1,0x4C2},
    {0x4C3,0x4C4},{0x4C5,0x4C6},{0x4C7,0x4C8},{0x4C9,0x4CA},{0x4CB,0x4CC},{0x4CD,0x4CE},{0x4D0,0x4D1},{0x4D2,0x4D3},
    {0x4D4,0x4D5},{0x4D6,0x4D7},{0x4D8,0x4D9},{0x4DA,0x4DB},{0x4DC,0x4DD},{0x4DE,0x4DF},{0x4E0,0x4E1},{0x4E2,0x4E3},
    {0x4E4,0x4E5},{0x4E6,0x4E7},{0x4E8,0x4E9},{0x4EA,0x4EB},{0x4EC,0x4ED},{0x4EE,0x4EF},{0x4F0,0x4F1},{0x4F2,0x4F3},
    {0x4F4,0x4F5},{0x4F6,0x4F7},{0x4F8,0x4F9},{0x4FA,0x4FB},{0x4FC,0x4FD},{0x4FE,0x4FF},{0x500,0x501},{0x502,0x503},
    {0x504,0x505},{0x506,0x507},{0x508,0x509},{0x50A,0x50B},{0x50C,0x50D},{0x50E,0x50F},{0x510,0x511},{0x512,0x513},
    {0x514,0x515},{0x516,0x517},{0x518,0x519},{0x51A,0x51B},{0x51C,0x51D},{0x51E,0x51F},{0x520,0x521},{0x522,0x523},
    {0x524,0x525},{0x526,0x527},{0x528,0x529},{0x52A,0x52B},{0x52C,0x52D},{0x52E,0x52F},{0x531,0x561},{0x532,0x562},
    {0x533,0x563},{0x534,0x564},{0x535,0x565},{0x536,0x566},{0x537,0x567},{0x538,0x568},{0x539,0x569},{0x53A,0x56A},
    {0x53B,0x56B},{0x53C,0x56C},{0x53D,0x56D},{0x53E,0x56E},{0x53F,0x56F},{0x540,0x570},{0x541,0x571},{0x542,0x572},
    {0x543,0x573},{0x544,0x574},{0x545,0x575},{0x546,0x576},{0x547,0x577},{0x548,0x578},{0x549,0x579},{0x54A,0x57A},
    {0x54B,0x57B},{0x54C,0x57C},{0x54D,0x57D},{0x54E,0x57E},{0x54F,0x57F},{0x550,0x580},{0x551,0x581},{0x552,0x582},
    {0x553,0x583},{0x554,0x584},{0x555,0x585},{0x556,0x586},{0x10A0,0x2D00},{0x10A1,0x2D01},{0x10A2,0x2D02},{0x10A3,0x2D03},
    {0x10A4,0x2D04},{0x10A5,0x2D05},{0x10A6,0x2D06},{0x10A7,0x2D07},{0x10A8,0x2D08},{0x10A9,0x2D09},{0x10AA,0x2D0A},{0x10AB,0x2D0B},
    {0x10AC,0x2D0C},{0x10AD,0x2D0D},{0x10AE,0x2D0E},{0x10AF,0x2D0F},{0x10B0,0x2D10},{0x10B1,0x2D11},{0x10B2,0x2D12},{0x10B3,0x2D13},
    {0x10B4,0x2D14},{0x10B5,0x2D15},{0x10B6,0x2D16},{0x10B7,0x2D17},{0x10B8,0x2D18},{0x10B9,0x2D19},{0x10BA,0x2D1A},{0x10BB,0x2D1B},
    {0x10BC,0x2D1C},{0x10BD,0x2D1D},{0x10BE,0x2D1E},{0x10BF,0x2D1F},{0x10C0,0x2D20},{0x10C1,0x2D21},{0x10C2,0x2D22},{0x10C3,0x2D23},
    {0x10C4,0x2D24},{0x10C5,0x2D25},{0x10C7,0x2D27},{0x10CD,0x2D2D},{0x13A0,0xAB70},{0x13A1,0xAB71},{0x13A2,0xAB72},{0x13A3,0xAB73},
    {0x13A4,0xAB74},{0x13A5,0xAB75},{0x13A6,0xAB76},{0x13A7,0xAB77},{0x13A8,0xAB78},{0x13A9,0xAB79},{0x13AA,0xAB7A},{0x13AB,0xAB7B},
    {0x13AC,0xAB7C},{0x13AD,0xAB7D},{0x13AE,0xAB7E},{0x13AF,0xAB7F},{0x13B0,0xAB80},{0x13B1,0xAB81},{0x13B2,0xAB82},{0x13B3,0xAB83},
    {0x13B4,0xAB84},{0x13B5,0xAB85},{0x13B6,0xAB86},{0x13B7,0xAB87},{0x13B8,0xAB88},{0x13B9,0xAB89},{0x13BA,0xAB8A},{0x13BB,0xAB8B},
    {0x13BC,0xAB8C},{0x13BD,0xAB8D},{0x13BE,0xAB8E},{0x13BF,0xAB8F},{0x13C0,0xAB90},{0x13C1,0xAB91},{0x13C2,0xAB92},{0x13C3,0xAB93},
    {0x13C4,0xAB94},{0x13C5,0xAB95},{0x13C6,0xAB96},{0x13C7,0xAB97},{0x13C8,0xAB98},{0x13C9,0xAB99},{0x13CA,0xAB9A},{0x13CB,0xAB9B},
    {0x13CC,0xAB9C},{0x13CD,0xAB9D},{0x13CE,0xAB9E},{0x13CF,0xAB9F},{0x13D0,0xABA0},{0x13D1,0xABA1},{0x13D2,0xABA2},{0x13D3,0xABA3},
    {0x13D4,0xABA4},{0x13D5,0xABA5},{0x13D6,0xABA6},{0x13D7,0xABA7},{0x13D8,0xABA8},{0x13D9,0xABA9},{0x13DA,0xABAA},{0x13DB,0xABAB},
    {0x13DC,0xABAC},{0x13DD,0xABAD},{0x13DE,0xABAE},{0x13DF,0xABAF},{0x13E0,0xABB0},{0x13E1,0xABB1},{0x13E2,0xABB2},{0x13E3,0xABB3},
    {0x13E4,0xABB4},{0x13E5,0xABB5},{0x13E6,0xABB6},{0x13E7,0xABB7},{0x13E8,0xABB8},{0x13E9,0xABB9},{0x13EA,0xABBA},{0x13EB,0xABBB},
    {0x13EC,0xABBC},{0x13ED,0xABBD},{0x13EE,0xABBE},{0x13EF,0xABBF},{0x13F0,0x13F8},{0x13F1,0x13F9},{0x13F2,0x13FA},{0x13F3,0x13FB},
    {0x13F4,0x13FC},{0x13F5,0x13FD},{0x1C90,0x10D0},{0x1C91,0x10D1},{0x1C92,0x10D2},{0x1C93,0x10D3},{0x1C94,0x10D4},{0x1C95,0x10D5},
    {0x1C96,0x10D6},{0x1C97,0x10D7},{0x1C98,0x10D8},{0x1C99,0x10D9},{0x1C9A,0x10DA},{0x1C9B,0x10DB},{0x1C9C,0x10DC},{0x1C9D,0x10DD},
    {0x1C9E,0x10DE},{0x1C9F,0x10DF},{0x1CA0,0x10E0},{0x1CA1,0x10E1},{0x1CA2,0x10E2},{0x1CA3,0x10E3},{0x1CA4,0x10E4},{0x1CA5,0x10E5},
    {0x1CA6,0x10E6},{0x1CA7,0x10E7},{0x1CA8,0x10E8},{0x1CA9,0x10E9},{0x1CAA,0x10EA},{0x1CAB,0x10EB},{0x1CAC,0x10EC},{0x1CAD,0x10ED},
    {0x1CAE,0x10EE},{0x1CAF,0x10EF},{0x1CB0,0x10F0},{0x1CB1,0x10F1},{0x1CB2,0x10F2},{0x1CB3,0x10F3},{0x1CB4,0x10F4},{0x1CB5,0x10F5},
    {0x1CB6,0x10F6},{0x1CB7,0x10F7},{0x1CB8,0x10F8},{0x1CB9,0x10F9},{0x1CBA,0x10FA},{0x1CBD,0x10FD},{0x1CBE,0x10FE},{0x1CBF,0x10FF},
    {0x1E00,0x1E01},{0x1E02,0x1E03},{0x1E04,0x1E05},{0x1E06,0x1E07},{0x1E08,0x1E09},{0x1E0A,0x1E0B},{0x1E0C,0x1E0D},{0x1E0E,0x1E0F},
    {0x1E10,0x1E11},{0x1E12,0x1E13},{0x1E14,0x1E15},{0x1E16,0x1E17},{0x1E18,0x1E19},{0x1E1A,0x1E1B},{0x1E1C,0x1E1D},{0x1E1E,0x1E1F},
    {0x1E20,0x1E21},{0x1E22,0x1E23},{0x1E24,0x1E25},{0x1E26,0x1E27},{0x1E28,0x1E29},{0x1E2A,0x1E2B},{0x1E2C,0x1E2D},{0x1E2E,0x1E2F},
    {0x1E30,0x1E31},{0x1E32,0x1E33},{0x1E34,0x1E35},{0x1E36,0x1E37},{0x1E38,0x1E39},{0x1E3A,0x1E3B},{0x1E3C,0x1E3D},{0x1E3E,0x1E3F},
    {0x1E40,0x1E41},{0x1E42,0x1E43},{0x1E44,0x1E45},{0x1E46,0x1E47},{0x1E48,0x1E49},{0x1E4A,0x1E4B},{0x1E4C,0x1E4D},{0x1E4E,0x1E4F},
    {0x1E50,0x1E51},{0x1E52,0x1E53},{0x1E54,0x1E55},{0x1E56,0x1E57},{0x1E58,0x1E59},{0x1E5A,0x1E5B},{0x1E5C,0x1E5D},{0x1E5E,0x1E5F},
    {0x1E60,0x1E61},{0x1E62,0x1E63},{0x1E64,0x1E65},{0x1E66,0x1E67},{0x1E68,0x1E69},{0x1E6A,0x1E6B},{0x1E6C,0x1E6D},{0x1E6E,0x1E6F},
    {0x1E70,0x1E71},{0x1E72,0x1E73},{0x1E74,0x1E75},{0x1E76,0x1E77},{0x1E78,0x1E79},{0x1E7A,0x1E7B},{0x1E7C,0x1E7D},{0x1E7E,0x1E7F},
    {0x1E80,0x1E81},{0x1E82,0x1E83},{0x1E84,0x1E85},{0x1E86,0x1E87},{0x1E88,0x1E89},{0x1E8A,0x1E8B},{0x1E8C,0x1E8D},{0x1E8E,0x1E8F},
    {0x1E90,0x1E91},{0x1E92,0x1E93},{0x1E94,0x1E95},{0x1E9E,0xDF},{0x1EA0,0x1EA1},{0x1EA2,0x1EA3},{0x1EA4,0x1EA5},{0x1EA6,0x1EA7},
    {0x1EA8,0x1EA9},{0x1EAA,0x1EAB},{0x1EAC,0x1EAD},{0x1EAE,0x1EAF},{0x1EB0,0x1EB1},{0x1EB2,0x1EB3},{0x1EB4,0x1EB5},{0x1EB6,0x1EB7},
    {0x1EB8,0x1EB9},{0x1EBA,0x1EBB},{0x1EBC,0x1EBD},{0x1EBE,0x1EBF},{0x1EC0,0x1EC1},{0x1EC2,0x1EC3},{0x1EC4,0x1EC5},{0x1EC6,0x1EC7},
    {0x1EC8,0x1EC9},{0x1ECA,0x1ECB},{0x1ECC,0x1ECD},{0x1ECE,0x1ECF},{0x1ED0,0x1ED1},{0x1ED2,0x1ED3},{0x1ED4,0x1ED5},{0x1ED6,0x1ED7},
    {0x1ED8,0x1ED9},{0x1EDA,0x1EDB},{0x1EDC,0x1EDD},{0x1EDE,0x1EDF},{0x1EE0,0x1EE1},{0x1EE2,0x1EE3},{0x1EE4,0x1EE5},{0x1EE6,0x1EE7},
    {0x1EE8,0x1EE9},{0x1EEA,0x1EEB},{0x1EEC,0x1EED},{0x1EEE,0x1EEF},{0x1EF0,0x1EF1},{0x1EF2,0x1EF3},{0x1EF4,0x1EF5},{0x1EF6,0x1EF7},
    {0x1EF8,0x1EF9},{0x1EFA,0x1EFB},{0x1EFC,0x1EFD},{0x1EFE,0x1EFF},{0x1F08,0x1F00},{0x1F09,0x1F01},{0x1F0A,0x1F02},{0x1F0B,0x1F03},
    {0x1F0C,0x1F04},{0x1F0D,0x1F05},{0x1F0E,0x1F06},{0x1F0F,0x1F07},{0x1F18,0x1F10},{0x1F19,0x1F11},{0x1F1A,0x1F12},{0x1F1B,0x1F13},
    {0x1F1C,0x1F14},{0x1F1D,0x1F15},{0x1F28,0x1F20},{0x1F29,0x1F21},{0x1F2A,0x1F22},{0x1F2B,0x1F23},{0x1F2C,0x1F24},{0x1F2D,0x1F25},
    {0x1F2E,0x1F26},{0x1F2F,0x1F27},{0x1F38,0x1F30},{0x1F39,0x1F31},{0x1F3A,0x1F32},{0x1F3B,0x1F33},{0x1F3C,0x1F34},{0x1F3D,0x1F35},
    {0x1F3E,0x1F36},{0x1F3F,0x1F37},{0x1F48,0x1F40},{0x1F49,0x1F41},{0x1F4A,0x1F42},{0x1F4B,0x1F43},{0x1F4C,0x1F44},{0x1F4D,0x1F45},
    {0x1F59,0x1F51},{0x1F5B,0x1F53},{0x1F5D,0x1F55},{0x1F5F,0x1F57},{0x1F68,0x1F60},{0x1F69,0x1F61},{0x1F6A,0x1F62},{0x1F6B,0x1F63},
    {0x1F6C,0x1F64},{0x1F6D,0x1F65},{0x1F6E,0x1F66},{0x1F6F,0x1F67},{0x1F88,0x1F80},{0x1F89,0x1F81},{0x1F8A,0x1F82},{0x1F8B,0x1F83},
    {0x1F8C,0x1F84},{0x1F8D,0x1F85},{0x1F8E,0x1F86},{0x1F8F,0x1F87},{0x1F98,0x1F90},{0x1F99,0x1F91},{0x1F9A,0x1F92},{0x1F9B,0x1F93},
    {0x1F9C,0x1F94},{0x1F9D,0x1F95},{0x1F9E,0x1F96},{0x1F9F,0x1F97},{0x1FA8,0x1FA0},{0x1FA9,0x1FA1},{0x1FAA,0x1FA2},{0x1FAB,0x1FA3},
    {0x1FAC,0x1FA4},{0x1FAD,0x1FA5},{0x1FAE,0x1FA6},{0x1FAF,0x1FA7},{0x1FB8,0x1FB0},{0x1FB9,0x1FB1},{0x1FBA,0x1F70},{0x1FBB,0x1F71},
    {0x1FBC,0x1FB3},{0x1FC8,0x1F72},{0x1FC9,0x1F73},{0x1FCA,0x1F74},{0x1FCB,0x1F75},{0x1FCC,0x1FC3},{0x1FD8,0x1FD0},{0x1FD9,0x1FD1},
    {0x1FDA,0x1F76},{0x1FDB,0x1F77},{0x1FE8,0x1FE0},{0x1FE9,0x1FE1},{0x1FEA,0x1F7A},{0x1FEB,0x1F7B},{0x1FEC,0x1FE5},{0x1FF8,0x1F78},
    {0x1FF9,0x1F79},{0x1FFA,0x1F7C},{0x1FFB,0x1F7D},{0x1FFC,0x1FF3},{0x2126,0x3C9},{0x212A,0x6B},{0x212B,0xE5},{0x2132,0x214E},
    {0x2160,0x2170},{0x2161,0x2171},{0x2162,0x2172},{0x2163,0x2173},{0x2164,0x2174},{0x2165,0x2175},{0x2166,0x2176},{0x2167,0x2177},
    {0x2168,0x2178},{0x2169,0x2179},{0x216A,0x217A},{0x216B,0x217B},{0x216C,0x217C},{0x216D,0x217D},{0x216E,0x217E},{0x216F,0x217F},
    {0x2183,0x2184},{0x24B6,0x24D0},{0x24B7,0x24D1},{0x24B8,0x24D2},{0x24B9,0x24D3},{0x24BA,0x24D4},{0x24BB,0x24D5},{0x24BC,0x24D6},
    {0x24BD,0x24D7},{0x24BE,0x24D8},{0x24BF,0x24D9},{0x24C0,0x24DA},{0x24C1,0x24DB},{0x24C2,0x24DC},{0x24C3,0x24DD},{0x24C4,0x24DE},
    {0x24C5,0x24DF},{0x24C6,0x24E0},{0x24C7,0x24E1},{0x24C8,0x24E2},{0x24C9,0x24E3},{0x24CA,0x24E4},{0x24CB,0x24E5},{0x24CC,0x24E6},
    {0x24CD,0x24E7},{0x24CE,0x24E8},{0x24CF,0x24E9},{0x2C00,0x2C30},{0x2C01,0x2C31},{0x2C02,0x2C32},{0x2C03,0x2C33},{0x2C04,0x2C34},
    {0x2C05,0x2C35},{0x2C06,0x2C36},{0x2C07,0x2C37},{0x2C08,0x2C38},{0x2C09,0x2C39},{0x2C0A,0x2C3A},{0x2C0B,0x2C3B},{0x2C0C,0x2C3C},
    {0x2C0D,0x2C3D},{0x2C0E,0x2C3E},{0x2C0F,0x2C3F},{0x2C10,0x2C40},{0x2C11,0x2C41},{0x2C12,0x2C42},{0x2C13,0x2C43},{0x2C14,0x2C44},
    {0x2C15,0x2C45},{0x2C16,0x2C46},{0x2C17,0x2C47},{0x2C18,0x2C48},{0x2C19,0x2C49},{0x2C1A,0x2C4A},{0x2C1B,0x2C4B},{0x2C1C,0x2C4C},
    {0x2C1D,0x2C4D},{0x2C1E,0x2C4E},{0x2C1F,0x2C4F},{0x2C20,0x2C50},{0x2C21,0x2C51},{0x2C22,0x2C52},{0x2C23,0x2C53},{0x2C24,0x2C54},
    {0x2C25,0x2C55},{0x2C26,0x2C56},{0x2C27,0x2C57},{0x2C28,0x2C58},{0x2C29,0x2C59},{0x2C2A,0x2C5A},{0x2C2B,0x2C5B},{0x2C2C,0x2C5C},
    {0x2C2D,0x2C5D},{0x2C2E,0x2C5E},{0x2C60,0x2C61},{0x2C62,0x26B},{0x2C63,0x1D7D},{0x2C64,0x27D},{0x2C67,0x2C68},{0x2C69,0x2C6A},
    {0x2C6B,0x2C6C},{0x2C6D,0x251},{0x2C6E,0x271},{0x2C6F,0x250},{0x2C70,0x252},{0x2C72,0x2C73},{0x2C75,0x2C76},{0x2C7E,0x23F},
    {0x2C7F,0x240},{0x2C80,0x2C81},{0x2C82,0x2C83},{0x2C84,0x2C85},{0x2C86,0x2C87},{0x2C88,0x2C89},{0x2C8A,0x2C8B},{0x2C8C,0x2C8D},
    {0x2C8E,0x2C8F},{0x2C90,0x2C91},{0x2C92,0x2C93},{0x2C94,0x2C95},{0x2C96,0x2C97},{0x2C98,0x2C99},{0x2C9A,0x2C9B},{0x2C9C,0x2C9D},
    {0x2C9E,0x2C9F},{0x2CA0,0x2CA1},{0x2CA2,0x2CA3},{0x2CA4,0x2CA5},{0x2CA6,0x2CA7},{0x2CA8,0x2CA9},{0x2CAA,0x2CAB},{0x2CAC,0x2CAD},
    {0x2CAE,0x2CAF},{0x2CB0,0x2CB1},{0x2CB2,0x2CB3},{0x2CB4,0x2CB5},{0x2CB6,0x2CB7},{0x2CB8,0x2CB9},{0x2CBA,0x2CBB},{0x2CBC,0x2CBD},
    {0x2CBE,0x2CBF},{0x2CC0,0x2CC1},{0x2CC2,0x2CC3},{0x2CC4,0x2CC5},{0x2CC6,0x2CC7},{0x2CC8,0x2CC9},{0x2CCA,0x2CCB},{0x2CCC,0x2CCD},
    {0x2CCE,0x2CCF},{0x2CD0,0x2CD1},{0x2CD2,0x2CD3},{0x2CD4,0x2CD5},{0x2CD6,0x2CD7},{0x2CD8,0x2CD9},{0x2CDA,0x2CDB},{0x2CDC,0x2CDD},
    {0x2CDE,0x2CDF},{0x2CE0,0x2CE1},{0x2CE2,0x2CE3},{0x2CEB,0x2CEC},{0x2CED,0x2CEE},{0x2CF2,0x2CF3},{0xA640,0xA641},{0xA642,0xA643},
    {0xA644,0xA645},{0xA646,0xA647},{0xA648,0xA649},{0xA64A,0xA64B},{0xA64C,0xA64D},{0xA64E,0xA64F},{0xA650,0xA651},{0xA652,0xA653},
    {0xA654,0xA655},{0xA656,0xA657},{0xA658,0xA659},{0xA65A,0xA65B},{0xA65C,0xA65D},{0xA65E,0xA65F},{0xA660,0xA661},{0xA662,0xA663},
    {0xA664,0xA665},{0xA666,0xA667},{0xA668,0xA669},{0xA66A,0xA66B},{0xA66C,0xA66D},{0xA680,0xA681},{0xA682,0xA683},{0xA684,0xA685},
    {0xA686,0xA687},{0xA688,0xA689},{0xA68A,0xA68B},{0xA68C,0xA68D},{0xA68E,0xA68F},{0xA690,0xA691},{0xA692,0xA693},{0xA694,0xA695},
    {0xA696,0xA697},{0xA698,0xA699},{0xA69A,0xA69B},{0xA722,0xA723},{0xA724,0xA725},{0xA726,0xA727},{0xA728,0xA729},{0xA72A,0xA72B},
    {0xA72C,0xA72D},{0xA72E,0xA72F},{0xA732,0xA733},{0xA734,0xA735},{0xA736,0xA737},{0xA738,0xA739},{0xA73A,0xA73B},{0xA73C,0xA73D},
    {0xA73E,0xA73F},{0xA740,0xA741},{0xA742,0xA743},{0xA744,0xA745},{0xA746,0xA747},{0xA748,0xA749},{0xA74A,0xA74B},{0xA74C,0xA74D},
    {0xA74E,0xA74F},{0xA750,0xA751},{0xA752,0xA753},{0xA754,0xA755},{0xA756,0xA757},{0xA758,0xA759},{0xA75A,0xA75B},{0xA75C,0xA75D},
    {0xA75E,0xA75F},{0xA760,0xA761},{0xA762,0xA763},{0xA764,0xA765},{0xA766,0xA767},{0xA768,0xA769},{0xA76A,0xA76B},{0xA76C,0xA76D},
    {0xA76E,0xA76F},{0xA779,0xA77A},{0xA77B,0xA77C},{0xA77D,0x1D79},{0xA77E,0xA77F},{0xA780,0xA781},{0xA782,0xA783},{0xA784,0xA785},
    {0xA786,0xA787},{0xA78B,0xA78C},{0xA78D,0x265},{0xA790,0xA791},{0xA792,0xA793},{0xA796,0xA797},{0xA798,0xA799},{0xA79A,0xA79B},
    {0xA79C,0xA79D},{0xA79E,0xA79F},{0xA7A0,0xA7A1},{0xA7A2,0xA7A3},{0xA7A4,0xA7A5},{0xA7A6,0xA7A7},{0xA7A8,0xA7A9},{0xA7AA,0x266},
    {0xA7AB,0x25C},{0xA7AC,0x261},{0xA7AD,0x26C},{0xA7AE,0x26A},{0xA7B0,0x29E},{0xA7B1,0x287},{0xA7B2,0x29D},{0xA7B3,0xAB53},
    {0xA7B4,0xA7B5},{0xA7B6,0xA7B7},{0xA7B8,0xA7B9},{0xA7BA,0xA7BB},{0xA7BC,0xA7BD},{0xA7BE,0xA7BF},{0xA7C2,0xA7C3},{0xA7C4,0xA794},
    {0xA7C5,0x282},{0xA7C6,0x1D8E},{0xA7C7,0xA7C8},{0xA7C9,0xA7CA},{0xA7F5,0xA7F6},{0xFF21,0xFF41},{0xFF22,0xFF42},{0xFF23,0xFF43},
    {0xFF24,0xFF44},{0xFF25,0xFF45},{0xFF26,0xFF46},{0xFF27,0xFF47},{0xFF28,0xFF48},{0xFF29,0xFF49},{0xFF2A,0xFF4A},{0xFF2B,0xFF4B},
    {0xFF2C,0xFF4C},{0xFF2D,0xFF4D},{0xFF2E,0xFF4E},{0xFF2F,0xFF4F},{0xFF30,0xFF50},{0xFF31,0xFF51},{0xFF32,0xFF52},{0xFF33,0xFF53},
    {0xFF34,0xFF54},{0xFF35,0xFF55},{0xFF36,0xFF56},{0xFF37,0xFF57},{0xFF38,0xFF58},{0xFF39,0xFF59},{0xFF3A,0xFF5A},{0x10400,0x10428},
    {0x10401,0x10429},{0x10402,0x1042A},{0x10403,0x1042B},{0x10404,0x1042C},{0x10405,0x1042D},{0x10406,0x1042E},{0x10407,0x1042F},{0x10408,0x10430},
    {0x10409,0x10431},{0x1040A,0x10432},{0x1040B,0x10433},{0x1040C,0x10434},{0x1040D,0x10435},{0x1040E,0x10436},{0x1040F,0x10437},{0x10410,0x10438},
    {0x10411,0x10439},{0x10412,0x1043A},{0x10413,0x1043B},{0x10414,0x1043C},{0x10415,0x1043D},{0x10416,0x1043E},{0x10417,0x1043F},{0x10418,0x10440},
    {0x10419,0x10441},{0x1041A,0x10442},{0x1041B,0x10443},{0x1041C,0x10444},{0x1041D,0x10445},{0x1041E,0x10446},{0x1041F,0x10447},{0x10420,0x10448},
    {0x10421,0x10449},{0x10422,0x1044A},{0x10423,0x1044B},{0x10424,0x1044C},{0x10425,0x1044D},{0x10426,0x1044E},{0x10427,0x1044F},{0x104B0,0x104D8},
    {0x104B1,0x104D9},{0x104B2,0x104DA},{0x104B3,0x104DB},{0x104B4,0x104DC},{0x104B5,0x104DD},{0x104B6,0x104DE},{0x104B7,0x104DF},{0x104B8,0x104E0},
    {0x104B9,0x104E1},{0x104BA,0x104E2},{0x104BB,0x104E3},{0x104BC,0x104E4},{0x104BD,0x104E5},{0x104BE,0x104E6},{0x104BF,0x104E7},{0x104C0,0x104E8},
    {0x104C1,0x104E9},{0x104C2,0x104EA},{0x104C3,0x104EB},{0x104C4,0x104EC},{0x104C5,0x104ED},{0x104C6,0x104EE},{0x104C7,0x104EF},{0x104C8,0x104F0},
    {0x104C9,0x104F1},{0x104CA,0x104F2},{0x104CB,0x104F3},{0x104CC,0x104F4},{0x104CD,0x104F5},{0x104CE,0x104F6},{0x104CF,0x104F7},{0x104D0,0x104F8},
    {0x104D1,0x104F9},{0x104D2,0x104FA},{0x104D3,0x104FB},{0x10C80,0x10CC0},{0x10C81,0x10CC1},{0x10C82,0x10CC2},{0x10C83,0x10CC3},{0x10C84,0x10CC4},
    {0x10C85,0x10CC5},{0x10C86,0x10CC6},{0x10C87,0x10CC7},{0x10C88,0x10CC8},{0x10C89,0x10CC9},{0x10C8A,0x10CCA},{0x10C8B,0x10CCB},{0x10C8C,0x10CCC},
    {0x10C8D,0x10CCD},{0x10C8E,0x10CCE},{0x10C8F,0x10CCF},{0x10C90,0x10CD0},{0x10C91,0x10CD1},{0x10C92,0x10CD2},{0x10C93,0x10CD3},{0x10C94,0x10CD4},
    {0x10C95,0x10CD5},{0x10C96,0x10CD6},{0x10C97,0x10CD7},{0x10C98,0x10CD8},{0x10C99,0x10CD9},{0x10C9A,0x10CDA},{0x10C9B,0x10CDB},{0x10C9C,0x10CDC},
    {0x10C9D,0x10CDD},{0x10C9E,0x10CDE},{0x10C9F,0x10CDF},{0x10CA0,0x10CE0},{0x10CA1,0x10CE1},{0x10CA2,0x10CE2},{0x10CA3,0x10CE3},{0x10CA4,0x10CE4},
    {0x10CA5,0x10CE5},{0x10CA6,0x10CE6},{0x10CA7,0x10CE7},{0x10CA8,0x10CE8},{0x10CA9,0x10CE9},{0x10CAA,0x10CEA},{0x10CAB,0x10CEB},{0x10CAC,0x10CEC},
    {0x10CAD,0x10CED},{0x10CAE,0x10CEE},{0x10CAF,0x10CEF},{0x10CB0,0x10CF0},{0x10CB1,0x10CF1},{0x10CB2,0x10CF2},{0x118A0,0x118C0},{0x118A1,0x118C1},
    {0x118A2,0x118C2},{0x118A3,0x118C3},{0x118A4,0x118C4},{0x118A5,0x118C5},{0x118A6,0x118C6},{0x118A7,0x118C7},{0x118A8,0x118C8},{0x118A9,0x118C9},
    {0x118AA,0x118CA},{0x118AB,0x118CB},{0x118AC,0x118CC},{0x118AD,0x118CD},{0x118AE,0x118CE},{0x118AF,0x118CF},{0x118B0,0x118D0},{0x118B1,0x118D1},
    {0x118B2,0x118D2},{0x118B3,0x118D3},{0x118B4,0x118D4},{0x118B5,0x118D5},{0x118B6,0x118D6},{0x118B7,0x118D7},{0x118B8,0x118D8},{0x118B9,0x118D9},
    {0x118BA,0x118DA},{0x118BB,0x118DB},{0x118BC,0x118DC},{0x118BD,0x118DD},{0x118BE,0x118DE},{0x118BF,0x118DF},{0x16E40,0x16E60},{0x16E41,0x16E61},
    {0x16E42,0x16E62},{0x16E43,0x16E63},{0x16E44,0x16E64},{0x16E45,0x16E65},{0x16E46,0x16E66},{0x16E47,0x16E67},{0x16E48,0x16E68},{0x16E49,0x16E69},
    {0x16E4A,0x16E6A},{0x16E4B,0x16E6B},{0x16E4C,0x16E6C},{0x16E4D,0x16E6D},{0x16E4E,0x16E6E},{0x16E4F,0x16E6F},{0x16E50,0x16E70},{0x16E51,0x16E71},
    {0x16E52,0x16E72},{0x16E53,0x16E73},{0x16E54,0x16E74},{0x16E55,0x16E75},{0x16E56,0x16E76},{0x16E57,0x16E77},{0x16E58,0x16E78},{0x16E59,0x16E79},
    {0x16E5A,0x16E7A},{0x16E5B,0x16E7B},{0x16E5C,0x16E7C},{0x16E5D,0x16E7D},{0x16E5E,0x16E7E},{0x16E5F,0x16E7F},{0x1E900,0x1E922},{0x1E901,0x1E923},
    {0x1E902,0x1E924},{0x1E903,0x1E925},{0x1E904,0x1E926},{0x1E905,0x1E927},{0x1E906,0x1E928},{0x1E907,0x1E929},{0x1E908,0x1E92A},{0x1E909,0x1E92B},
    {0x1E90A,0x1E92C},{0x1E90B,0x1E92D},{0x1E90C,0x1E92E},{0x1E90D,0x1E92F},{0x1E90E,0x1E930},{0x1E90F,0x1E931},{0x1E910,0x1E932},{0x1E911,0x1E933},
    {0x1E912,0x1E934},{0x1E913,0x1E935},{0x1E914,0x1E936},{0x1E915,0x1E937},{0x1E916,0x1E938},{0x1E917,0x1E939},{0x1E918,0x1E93A},{0x1E919,0x1E93B},
    {0x1E91A,0x1E93C},{0x1E91B,0x1E93D},{0x1E91C,0x1E93E},{0x1E91D,0x1E93F},{0x1E91E,0x1E940},{0x1E91F,0x1E941},{0x1E920,0x1E942},{0x1E921,0x1E943},
};
const std::size_t kLowerMapSize = sizeof(kLowerMap) / sizeof(kLowerMap[0]);

}  // namespace stegocanary::uni
