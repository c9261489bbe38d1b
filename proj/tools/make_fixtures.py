#!/usr/bin/env python3
"""Regenerates the offline fixture packs under data/fixtures/.

Each pack is one JSON document per destination city with the stores
"city", "tips", "sights", "hotels", "restaurants" and "flights". Sight and
flight records use the same field names as exported plan records. Output is
deterministic; rerun after editing the tables below.
"""

import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures"

# name, lat, lon, types, price ("Free", "$x.xx" or None), rating, duration h, window
CITIES = {
    "shanghai": {
        "city_name": "shanghai, shanghai, china",
        "center": (31.230415999999998, 121.47370099999999),
        "weather": {"celsius": 39, "fahrenheit": 103, "conditions": "Mostly sunny"},
        "description": "Coastal metropolis on the Huangpu River with a colonial-era waterfront, "
                       "a high-rise financial district and classical gardens.",
        "tips": [
            "Autumn is the most comfortable season; summer afternoons are hot and humid.",
            "The metro covers most sights; keep a transit card topped up.",
            "Carry tissues and bottled water when exploring older neighbourhoods.",
            "Popular sights are crowded on public holidays; go early in the day.",
        ],
        "sights": [
            (7, "Yu Garden", 31.2272355, 121.492094, ["Tourist attraction", "Attraction", "Botanical garden"], "$4.16", 4.5, 2, [8, 12],
             "279 Yu Yuan Lao Jie, Huangpu, Shanghai, China, 200000"),
            (8, "People's Square", 31.22967, 121.47616099999999, ["Park"], "Free", 4.3, 1.5, [10, 16],
             "Huang Pu Qu, China, 200003"),
            (9, "Waibaidu Bridge", 31.2449, 121.4905, ["Bridge", "Historical landmark"], "Free", 4.5, 0.5, [18, 22],
             "Waitan, Huang Pu Qu, China, 200002"),
            (10, "Shanghai Ocean Aquarium", 31.2407, 121.5017, ["Aquarium"], "$22.28", 4.2, 2, [10, 17],
             "1388 Lujiazui Ring Road, Lujiazui, Pudong, Shanghai, China, 200031"),
            (11, "People's Park", 31.2335, 121.4711, ["Park"], None, 4.4, 1, [9, 17],
             "231 Nanjing Rd (W), People's Square, Huangpu, Shanghai, China, 200003"),
            (12, "Former Residence of Sun Yat-Sen", 31.2176, 121.4673, ["Museum", "Historical place"], None, 4.3, 1, [9, 16],
             "7 Xiangshan Road, Luwan District, China, 200041"),
            (13, "Jade Buddha Temple", 31.2418, 121.4455, ["Buddhist temple"], None, 4.6, 1, [9, 16],
             "170 Anyuan Road, Jing'an District, China, 200061"),
            (14, "The Bund", 31.2400, 121.4900, ["Promenade", "Historical landmark"], "Free", 4.7, 1.5, [9, 17],
             "Zhongshan Rd (E-1), Waitan, Huangpu, Shanghai, China, 200002"),
            (15, "Oriental Pearl TV Tower", 31.2397, 121.4998, ["Observation deck", "Landmark"], "$29.00", 4.4, 1.5, [10, 21],
             "1 Century Avenue, Pudong, Shanghai, China"),
            (16, "Shanghai Tower", 31.2335, 121.5055, ["Observation deck", "Landmark"], "$25.00", 4.6, 1.5, [10, 21],
             "501 Yincheng Middle Road, Pudong, Shanghai, China"),
            (17, "Shanghai Museum", 31.2282, 121.4756, ["Museum"], "Free", 4.7, 2, [9, 17],
             "201 Renmin Avenue, Huangpu, Shanghai, China"),
            (18, "Nanjing Road Pedestrian Street", 31.2354, 121.4797, ["Shopping street"], "Free", 4.4, 1.5, [10, 21],
             "Nanjing Road East, Huangpu, Shanghai, China"),
            (19, "Tianzifang", 31.2096, 121.4697, ["Shopping area", "Art gallery"], "Free", 4.2, 1.5, [10, 20],
             "Lane 210 Taikang Road, Huangpu, Shanghai, China"),
            (20, "Xintiandi", 31.2197, 121.4747, ["Shopping mall", "Entertainment"], "Free", 4.4, 1.5, [11, 22],
             "Lane 181 Taicang Road, Huangpu, Shanghai, China"),
            (21, "Jing'an Temple", 31.2235, 121.4456, ["Buddhist temple"], "$7.00", 4.5, 1, [8, 17],
             "1686 Nanjing Road West, Jing'an, Shanghai, China"),
            (22, "Shanghai Natural History Museum", 31.2354, 121.4594, ["Museum"], "$4.50", 4.6, 2, [9, 17],
             "510 Beijing West Road, Jing'an, Shanghai, China"),
            (23, "Shanghai Zoo", 31.1928, 121.3655, ["Zoo"], "$5.50", 4.3, 3, [8, 17],
             "2381 Hongqiao Road, Changning, Shanghai, China"),
            (24, "Century Park", 31.2156, 121.5515, ["Park"], "$1.50", 4.4, 2, [7, 18],
             "1001 Jinxiu Road, Pudong, Shanghai, China"),
            (25, "Zhujiajiao Water Town", 31.1110, 121.0569, ["Tourist attraction", "Historical place"], "Free", 4.3, 3, [9, 17],
             "Zhujiajiao, Qingpu, Shanghai, China"),
            (26, "Shanghai Disneyland", 31.1434, 121.6580, ["Amusement park"], "$65.00", 4.5, 6, [9, 21],
             "310 Huangzhao Road, Pudong, Shanghai, China"),
            (27, "Longhua Temple", 31.1755, 121.4453, ["Buddhist temple"], "$1.40", 4.5, 1, [8, 16],
             "2853 Longhua Road, Xuhui, Shanghai, China"),
            (28, "Shanghai Science and Technology Museum", 31.2192, 121.5437, ["Science museum"], "$6.00", 4.6, 2.5, [9, 17],
             "2000 Century Avenue, Pudong, Shanghai, China"),
            (29, "Lujiazui Riverside Promenade", 31.2420, 121.5030, ["Promenade", "Park"], "Free", 4.6, 1, [17, 22],
             "Binjiang Avenue, Pudong, Shanghai, China"),
            (30, "Power Station of Art", 31.2043, 121.4945, ["Art museum"], "Free", 4.4, 1.5, [11, 19],
             "678 Miaojiang Road, Huangpu, Shanghai, China"),
            (31, "Fuxing Park", 31.2167, 121.4669, ["Park"], "Free", 4.4, 1, [6, 18],
             "516 Fuxing Middle Road, Huangpu, Shanghai, China"),
            (32, "Wukang Road", 31.2078, 121.4387, ["Historical landmark", "Street"], "Free", 4.5, 1, [9, 19],
             "Wukang Road, Xuhui, Shanghai, China"),
            (33, "Shanghai Circus World", 31.2813, 121.4498, ["Circus", "Performing arts theater"], "$28.00", 4.5, 1.5, [19, 21],
             "2266 Gonghe New Road, Jing'an, Shanghai, China"),
            (34, "Bar Rouge", 31.2389, 121.4883, ["Bar", "Night club"], "$15.00", 4.1, 1.5, [20, 24],
             "18 Zhongshan East 1st Road, Huangpu, Shanghai, China"),
            (35, "City God Temple", 31.2268, 121.4923, ["Taoist temple"], "$1.40", 4.3, 1, [8, 16],
             "249 Fangbang Middle Road, Huangpu, Shanghai, China"),
            (36, "Shanghai Urban Planning Exhibition Center", 31.2299, 121.4757, ["Museum"], "$4.20", 4.4, 1.5, [9, 17],
             "100 Renmin Avenue, Huangpu, Shanghai, China"),
        ],
        "hotels": [
            ("h1", "Dayin International Youth Hostel", 31.2365, 121.4880, "$77.67", 4.0, "2:00 PM", "12:00 PM",
             ["Free Wi-Fi", "Shared kitchen", "24-hour front desk"]),
            ("h2", "Jinjiang Inn People's Square", 31.2318, 121.4705, "$95.00", 4.1, "2:00 PM", "12:00 PM",
             ["Free Wi-Fi", "Breakfast"]),
            ("h3", "Holiday Inn Express Zhabei", 31.2480, 121.4560, "$85.00", 4.2, "2:00 PM", "12:00 PM",
             ["Free Wi-Fi", "Breakfast", "Fitness room"]),
            ("h4", "Les Suites Orient Bund", 31.2300, 121.4980, "$210.00", 4.6, "3:00 PM", "12:00 PM",
             ["Free Wi-Fi", "River view", "Gym"]),
            ("h5", "The Peninsula Shanghai", 31.2425, 121.4885, "$420.00", 4.7, "3:00 PM", "12:00 PM",
             ["Pool", "Spa", "Fine dining"]),
        ],
        "restaurants": [
            ("r1", "Xiao Yang Sheng Jian Huanghe Road", 31.2362, 121.4707, "$", 4.3, "Chinese", "+86 21 5375 1793",
             "China, Shanghai, Huangpu, People's Square, Huanghe Road 97, 200003"),
            ("r2", "Yang's Fried Dumpling", 31.2393, 121.4850, "$", 4.4, "Chinese", "+86 21 6322 9763",
             "178 Ningbo Road, Huangpu, Shanghai, China, 200002"),
            ("r3", "Lost Heaven Bar", 31.2370, 121.4893, "$$", 4.2, "Chinese", "+86 21 6330 0967",
             "17 Yan'an East Road, Waitan, Huangpu, Shanghai, China, 200002"),
            ("r4", "Nanxiang Steamed Bun Restaurant", 31.2272, 121.4920, "$", 4.2, "Chinese", "+86 21 6355 4206",
             "85 Yuyuan Road, Huangpu, Shanghai, China"),
            ("r5", "Din Tai Fung Xintiandi", 31.2196, 121.4750, "$$", 4.5, "Chinese", "+86 21 6385 8378",
             "2F, Xintiandi South Block, Huangpu, Shanghai, China"),
            ("r6", "Jia Jia Tang Bao", 31.2343, 121.4728, "$", 4.4, "Chinese", "+86 21 6327 6878",
             "90 Huanghe Road, Huangpu, Shanghai, China"),
            ("r7", "Lao Zheng Xing", 31.2355, 121.4820, "$$", 4.1, "Chinese", "+86 21 6322 2624",
             "556 Fuzhou Road, Huangpu, Shanghai, China"),
            ("r8", "Haidilao Hot Pot People's Square", 31.2320, 121.4730, "$$", 4.6, "Chinese", "+86 21 6359 0216",
             "3F, 268 Xizang Middle Road, Huangpu, Shanghai, China"),
            ("r9", "Jianguo 328", 31.2050, 121.4590, "$", 4.5, "Chinese", "+86 21 6471 3819",
             "328 Jianguo West Road, Xuhui, Shanghai, China"),
            ("r10", "Ultraviolet", 31.2410, 121.4900, "$$$$", 4.8, "French", "+86 21 6323 9898",
             "Waitan, Huangpu, Shanghai, China"),
            ("r11", "Element Fresh", 31.2240, 121.4550, "$$", 4.2, "Western", "+86 21 6279 8682",
             "1376 Nanjing Road West, Jing'an, Shanghai, China"),
            ("r12", "Commune Social", 31.2270, 121.4520, "$$$", 4.5, "Spanish", "+86 21 6047 7638",
             "511 Jiangning Road, Jing'an, Shanghai, China"),
        ],
        "origin": "beijing",
        "origin_airport": ("Beijing Daxing International Airport", "PKX"),
        "flights": [
            # id, number, direction, price, dep, arr, minutes, airport (name, code), airplane
            (49, "CZ 8879", "outbound", 1209, "2024-08-06 08:00", "2024-08-06 10:10", 130,
             ("Shanghai Hongqiao International Airport", "SHA"), "Airbus A350"),
            (50, "CZ 8889", "outbound", 1209, "2024-08-06 11:20", "2024-08-06 13:50", 150,
             ("Shanghai Pudong International Airport", "PVG"), "Airbus A321"),
            (51, "CZ 8887", "outbound", 1209, "2024-08-06 12:00", "2024-08-06 14:10", 130,
             ("Shanghai Hongqiao International Airport", "SHA"), "Airbus A330"),
            (52, "CZ 8885", "outbound", 1209, "2024-08-06 16:00", "2024-08-06 18:20", 140,
             ("Shanghai Hongqiao International Airport", "SHA"), "Airbus A350"),
            (64, "CZ 8888", "return", 1209, "2024-08-09 15:30", "2024-08-09 17:45", 135,
             ("Shanghai Hongqiao International Airport", "SHA"), "Airbus A321neo"),
            (65, "CZ 8880", "return", 1209, "2024-08-09 11:25", "2024-08-09 13:40", 135,
             ("Shanghai Hongqiao International Airport", "SHA"), "Airbus A350"),
            (66, "MU 5102", "return", 1350, "2024-08-09 19:00", "2024-08-09 21:15", 135,
             ("Shanghai Hongqiao International Airport", "SHA"), "Boeing 737"),
        ],
        "airline": "China Southern",
    },
    "los angeles": {
        "city_name": "los angeles, california, usa",
        "center": (34.0522, -118.2437),
        "weather": {"celsius": 29, "fahrenheit": 84, "conditions": "Sunny"},
        "description": "Sprawling Southern California city known for film studios, beaches and hillside viewpoints.",
        "tips": ["Plan routes around traffic peaks.", "Sunscreen is essential year-round.",
                 "Many museums have free admission days."],
        "sights": [
            (1, "Griffith Observatory", 34.1184, -118.3004, ["Observatory", "Museum"], "Free", 4.8, 2, [12, 22], ""),
            (2, "Santa Monica Pier", 34.0094, -118.4973, ["Pier", "Amusement park"], "Free", 4.6, 2, [10, 21], ""),
            (3, "The Getty", 34.0780, -118.4741, ["Art museum"], "Free", 4.8, 3, [10, 17], ""),
            (4, "Hollywood Walk of Fame", 34.1016, -118.3269, ["Historical landmark", "Street"], "Free", 4.3, 1, [9, 21], ""),
            (5, "Natural History Museum of Los Angeles", 34.0171, -118.2887, ["Museum"], "$18.00", 4.7, 2.5, [9, 17], ""),
            (6, "California Science Center", 34.0157, -118.2863, ["Science museum"], "Free", 4.7, 2.5, [10, 17], ""),
            (7, "Los Angeles Zoo", 34.1484, -118.2841, ["Zoo"], "$24.00", 4.5, 3, [9, 17], ""),
            (8, "Venice Beach Boardwalk", 33.9850, -118.4695, ["Beach", "Promenade"], "Free", 4.4, 1.5, [9, 19], ""),
            (9, "Universal Studios Hollywood", 34.1381, -118.3534, ["Theme park"], "$109.00", 4.6, 6, [9, 21], ""),
            (10, "The Broad", 34.0544, -118.2506, ["Art museum"], "Free", 4.6, 1.5, [11, 19], ""),
            (11, "Grand Central Market", 34.0509, -118.2490, ["Market"], "Free", 4.6, 1, [8, 21], ""),
            (12, "Aquarium of the Pacific", 33.7620, -118.1971, ["Aquarium"], "$45.00", 4.6, 2.5, [9, 18], ""),
            (13, "Echo Park Lake", 34.0726, -118.2606, ["Park", "Lake"], "Free", 4.5, 1, [7, 19], ""),
            (14, "La Brea Tar Pits", 34.0638, -118.3555, ["Museum", "Park"], "$15.00", 4.5, 1.5, [9, 17], ""),
            (15, "Olvera Street", 34.0576, -118.2378, ["Historical landmark", "Market"], "Free", 4.4, 1, [10, 19], ""),
            (16, "Walt Disney Concert Hall", 34.0553, -118.2498, ["Concert hall", "Landmark"], "Free", 4.8, 1, [10, 16], ""),
            (17, "Rodeo Drive", 34.0674, -118.4017, ["Shopping street"], "Free", 4.5, 1.5, [10, 20], ""),
            (18, "Huntington Library and Botanical Gardens", 34.1290, -118.1145, ["Botanical garden", "Museum"], "$29.00", 4.8, 3, [10, 17], ""),
            (19, "Runyon Canyon Park", 34.1105, -118.3506, ["Park", "Hiking area"], "Free", 4.7, 1.5, [7, 11], ""),
            (20, "Cathedral of Our Lady of the Angels", 34.0577, -118.2452, ["Cathedral"], "Free", 4.6, 1, [9, 18], ""),
            (21, "The Abbey Food and Bar", 34.0834, -118.3766, ["Bar", "Night club"], "$20.00", 4.3, 2, [20, 24], ""),
        ],
        "hotels": [
            ("h1", "Freehand Los Angeles", 34.0469, -118.2565, "$150.00", 4.2, "4:00 PM", "11:00 AM", ["Pool", "Free Wi-Fi"]),
            ("h2", "Hotel Figueroa", 34.0449, -118.2634, "$230.00", 4.5, "3:00 PM", "12:00 PM", ["Pool", "Bar"]),
            ("h3", "USA Hostels Hollywood", 34.1012, -118.3260, "$60.00", 4.0, "2:00 PM", "11:00 AM", ["Shared kitchen"]),
            ("h4", "The Line LA", 34.0617, -118.3008, "$190.00", 4.3, "3:00 PM", "12:00 PM", ["Pool", "Restaurant"]),
        ],
        "restaurants": [
            ("r1", "Bestia", 34.0339, -118.2293, "$$$", 4.6, "Italian", "+1 213-514-5724", "2121 E 7th Pl"),
            ("r2", "Jon & Vinny's", 34.0836, -118.3615, "$$", 4.5, "Italian", "+1 323-334-3369", "412 N Fairfax Ave"),
            ("r3", "Pizzeria Mozza", 34.0836, -118.3387, "$$", 4.5, "Italian", "+1 323-297-0101", "641 N Highland Ave"),
            ("r4", "Philippe the Original", 34.0597, -118.2367, "$", 4.6, "American", "+1 213-628-3781", "1001 N Alameda St"),
            ("r5", "Guelaguetza", 34.0584, -118.3050, "$$", 4.5, "Mexican", "+1 213-427-0608", "3014 W Olympic Blvd"),
            ("r6", "Sushi Gen", 34.0468, -118.2383, "$$$", 4.6, "Japanese", "+1 213-617-0552", "422 E 2nd St"),
            ("r7", "Felix Trattoria", 33.9915, -118.4654, "$$$", 4.5, "Italian", "+1 424-387-8622", "1023 Abbot Kinney Blvd"),
            ("r8", "Howlin' Ray's", 34.0616, -118.2398, "$", 4.6, "American", "+1 213-935-8399", "727 N Broadway"),
        ],
        "origin": "new york",
        "origin_airport": ("John F. Kennedy International Airport", "JFK"),
        "flights": [
            (1, "DL 423", "outbound", 420, "2024-09-01 07:00", "2024-09-01 13:20", 380, ("Los Angeles International Airport", "LAX"), "Airbus A321"),
            (2, "AA 181", "outbound", 420, "2024-09-01 09:30", "2024-09-01 15:45", 375, ("Los Angeles International Airport", "LAX"), "Boeing 777"),
            (3, "DL 424", "return", 420, "2024-09-03 16:00", "2024-09-03 21:30", 330, ("Los Angeles International Airport", "LAX"), "Airbus A321"),
        ],
        "airline": "Delta",
    },
    "lyon": {
        "city_name": "lyon, auvergne-rhone-alpes, france",
        "center": (45.7640, 4.8357),
        "weather": {"celsius": 27, "fahrenheit": 81, "conditions": "Partly cloudy"},
        "description": "Historic city at the confluence of the Rhone and Saone, famous for its old town and cuisine.",
        "tips": ["The Lyon City Card covers transit and most museums.", "Traboules are best explored with a map."],
        "sights": [
            (1, "Basilica of Notre-Dame de Fourviere", 45.7623, 4.8226, ["Basilica"], "Free", 4.8, 1.5, [8, 18], ""),
            (2, "Vieux Lyon", 45.7625, 4.8270, ["Historical landmark", "Neighborhood"], "Free", 4.7, 2, [9, 21], ""),
            (3, "Parc de la Tete d'Or", 45.7786, 4.8525, ["Park", "Zoo"], "Free", 4.7, 2, [7, 19], ""),
            (4, "Musee des Confluences", 45.7327, 4.8180, ["Museum"], "$10.00", 4.5, 2, [10, 18], ""),
            (5, "Place Bellecour", 45.7578, 4.8320, ["Square", "Landmark"], "Free", 4.5, 0.5, [9, 21], ""),
            (6, "Musee des Beaux-Arts de Lyon", 45.7670, 4.8338, ["Art museum"], "$9.00", 4.7, 2, [10, 18], ""),
            (7, "Ancient Theatre of Fourviere", 45.7597, 4.8198, ["Historical landmark", "Amphitheatre"], "Free", 4.7, 1, [9, 19], ""),
            (8, "Les Halles de Lyon Paul Bocuse", 45.7630, 4.8510, ["Market"], "Free", 4.5, 1, [8, 14], ""),
            (9, "Mur des Canuts", 45.7791, 4.8300, ["Mural", "Landmark"], "Free", 4.6, 0.5, [9, 19], ""),
            (10, "Cinema and Miniature Museum", 45.7626, 4.8276, ["Museum"], "$12.00", 4.7, 1.5, [10, 18], ""),
            (11, "Aquarium de Lyon", 45.7271, 4.8180, ["Aquarium"], "$17.00", 4.3, 2, [11, 18], ""),
            (12, "Place des Terreaux", 45.7674, 4.8339, ["Square", "Fountain"], "Free", 4.5, 0.5, [9, 22], ""),
            (13, "Lyon Cathedral", 45.7607, 4.8270, ["Cathedral"], "Free", 4.6, 1, [8, 18], ""),
            (14, "Croix-Rousse Hill", 45.7743, 4.8322, ["Neighborhood", "Viewpoint"], "Free", 4.4, 1.5, [9, 19], ""),
            (15, "Parc des Hauteurs", 45.7620, 4.8205, ["Park"], "Free", 4.5, 1, [8, 19], ""),
            (16, "Gallo-Roman Museum", 45.7598, 4.8193, ["Museum"], "$5.00", 4.5, 1.5, [10, 18], ""),
            (17, "Rue de la Republique", 45.7625, 4.8360, ["Shopping street"], "Free", 4.3, 1, [10, 19], ""),
            (18, "Berges du Rhone", 45.7560, 4.8420, ["Promenade", "Park"], "Free", 4.6, 1, [8, 21], ""),
            (19, "Institut Lumiere", 45.7450, 4.8700, ["Museum"], "$8.00", 4.5, 1.5, [10, 18], ""),
            (20, "Passage Thiaffait", 45.7705, 4.8318, ["Shopping area"], "Free", 4.2, 0.5, [11, 19], ""),
        ],
        "hotels": [
            ("h1", "Away Hostel", 45.7561, 4.8330, "$45.00", 4.3, "3:00 PM", "11:00 AM", ["Cafe"]),
            ("h2", "Hotel Carlton Lyon", 45.7610, 4.8350, "$160.00", 4.4, "3:00 PM", "12:00 PM", ["Bar"]),
            ("h3", "Ibis Lyon Centre Perrache", 45.7490, 4.8260, "$85.00", 3.9, "2:00 PM", "12:00 PM", ["Breakfast"]),
            ("h4", "Villa Florentine", 45.7610, 4.8235, "$350.00", 4.7, "3:00 PM", "12:00 PM", ["Pool", "Spa"]),
        ],
        "restaurants": [
            ("r1", "Bouchon Daniel et Denise", 45.7637, 4.8367, "$$", 4.6, "French", "+33 4 78 60 66 53", "36 Rue Tramassac"),
            ("r2", "Le Bouchon des Filles", 45.7685, 4.8300, "$$", 4.6, "French", "+33 4 78 30 40 44", "20 Rue Sergent Blandan"),
            ("r3", "Cafe Comptoir Abel", 45.7530, 4.8270, "$$", 4.4, "French", "+33 4 78 37 46 18", "25 Rue Guynemer"),
            ("r4", "Les Fines Gueules", 45.7640, 4.8290, "$$", 4.5, "French", "+33 4 72 00 21 60", "16 Rue Lainerie"),
            ("r5", "Brasserie Georges", 45.7494, 4.8280, "$$", 4.2, "French", "+33 4 72 56 54 54", "30 Cours de Verdun"),
            ("r6", "Pizzeria Chez Puce", 45.7660, 4.8340, "$", 4.3, "Italian", "+33 4 78 28 57 22", "4 Rue des Capucins"),
            ("r7", "Sushi Wako", 45.7600, 4.8400, "$$", 4.4, "Japanese", "+33 4 78 42 95 83", "9 Rue Bat d'Argent"),
            ("r8", "La Meuniere", 45.7650, 4.8360, "$$", 4.5, "French", "+33 4 78 28 62 91", "11 Rue Neuve"),
        ],
        "origin": "paris",
        "origin_airport": ("Paris Charles de Gaulle Airport", "CDG"),
        "flights": [
            (1, "AF 7640", "outbound", 180, "2024-08-17 08:10", "2024-08-17 09:20", 70, ("Lyon Saint-Exupery Airport", "LYS"), "Airbus A319"),
            (2, "AF 7643", "return", 180, "2024-08-20 18:00", "2024-08-20 19:10", 70, ("Lyon Saint-Exupery Airport", "LYS"), "Airbus A319"),
        ],
        "airline": "Air France",
    },
    "edinburgh": {
        "city_name": "edinburgh, scotland, uk",
        "center": (55.9533, -3.1883),
        "weather": {"celsius": 16, "fahrenheit": 61, "conditions": "Light rain"},
        "description": "Hilly Scottish capital with a medieval old town, Georgian new town and a castle on volcanic rock.",
        "tips": ["Pack layers; weather changes quickly.", "Book castle tickets in advance in summer."],
        "sights": [
            (1, "Edinburgh Castle", 55.9486, -3.1999, ["Castle", "Historical landmark"], "$24.00", 4.6, 2.5, [9, 17], ""),
            (2, "Royal Mile", 55.9500, -3.1880, ["Street", "Historical landmark"], "Free", 4.7, 1.5, [9, 21], ""),
            (3, "Arthur's Seat", 55.9441, -3.1618, ["Hiking area", "Park"], "Free", 4.8, 2, [7, 18], ""),
            (4, "National Museum of Scotland", 55.9470, -3.1892, ["Museum"], "Free", 4.8, 2.5, [10, 17], ""),
            (5, "Palace of Holyroodhouse", 55.9527, -3.1722, ["Palace", "Historical landmark"], "$22.00", 4.6, 2, [9, 17], ""),
            (6, "Calton Hill", 55.9553, -3.1826, ["Viewpoint", "Park"], "Free", 4.7, 1, [9, 21], ""),
            (7, "Royal Botanic Garden Edinburgh", 55.9653, -3.2092, ["Botanical garden"], "Free", 4.7, 2, [10, 18], ""),
            (8, "Edinburgh Zoo", 55.9422, -3.2690, ["Zoo"], "$28.00", 4.4, 3, [10, 17], ""),
            (9, "Dean Village", 55.9526, -3.2180, ["Neighborhood", "Historical landmark"], "Free", 4.6, 1, [9, 19], ""),
            (10, "Scottish National Gallery", 55.9509, -3.1957, ["Art gallery", "Museum"], "Free", 4.7, 1.5, [10, 17], ""),
            (11, "Camera Obscura and World of Illusions", 55.9490, -3.1955, ["Museum", "Entertainment"], "$23.00", 4.5, 1.5, [9, 20], ""),
            (12, "Princes Street Gardens", 55.9519, -3.2010, ["Park", "Garden"], "Free", 4.6, 1, [8, 20], ""),
            (13, "St Giles' Cathedral", 55.9495, -3.1908, ["Cathedral"], "Free", 4.7, 1, [10, 17], ""),
            (14, "Greyfriars Kirkyard", 55.9467, -3.1925, ["Cemetery", "Historical landmark"], "Free", 4.6, 0.5, [9, 19], ""),
            (15, "Victoria Street", 55.9480, -3.1935, ["Shopping street"], "Free", 4.7, 0.5, [9, 20], ""),
            (16, "Scott Monument", 55.9524, -3.1933, ["Monument", "Landmark"], "$10.00", 4.6, 1, [10, 18], ""),
            (17, "Dynamic Earth", 55.9506, -3.1746, ["Science museum"], "$21.00", 4.5, 2, [10, 17], ""),
            (18, "The Water of Leith Walkway", 55.9590, -3.2175, ["Promenade", "Park"], "Free", 4.7, 1.5, [8, 19], ""),
            (19, "Surgeons' Hall Museums", 55.9466, -3.1848, ["Museum"], "$9.00", 4.6, 1.5, [10, 17], ""),
            (20, "The Royal Yacht Britannia", 55.9821, -3.1773, ["Museum", "Landmark"], "$22.00", 4.7, 2, [10, 16], ""),
            (21, "Whiski Bar", 55.9500, -3.1870, ["Bar", "Pub"], "$12.00", 4.4, 1.5, [19, 24], ""),
        ],
        "hotels": [
            ("h1", "Castle Rock Hostel", 55.9475, -3.1960, "$40.00", 4.3, "2:00 PM", "10:00 AM", ["Shared kitchen"]),
            ("h2", "Motel One Edinburgh-Royal", 55.9512, -3.1910, "$120.00", 4.5, "3:00 PM", "12:00 PM", ["Bar"]),
            ("h3", "Premier Inn Edinburgh City Centre", 55.9550, -3.1859, "$105.00", 4.4, "3:00 PM", "12:00 PM", ["Restaurant"]),
            ("h4", "The Balmoral", 55.9530, -3.1895, "$450.00", 4.7, "3:00 PM", "12:00 PM", ["Spa", "Pool"]),
        ],
        "restaurants": [
            ("r1", "The Witchery by the Castle", 55.9490, -3.1966, "$$$", 4.6, "British", "+44 131 225 5613", "352 Castlehill"),
            ("r2", "Oink", 55.9493, -3.1935, "$", 4.7, "British", "+44 7584 637416", "34 Victoria St"),
            ("r3", "The Devil's Advocate", 55.9505, -3.1900, "$$", 4.5, "British", "+44 131 225 4465", "9 Advocate's Close"),
            ("r4", "Makars Gourmet Mash Bar", 55.9515, -3.1922, "$$", 4.5, "British", "+44 131 226 1178", "9 Bank St"),
            ("r5", "Scran and Scallie", 55.9590, -3.2120, "$$", 4.4, "British", "+44 131 332 6281", "1 Comely Bank Rd"),
            ("r6", "Dishoom Edinburgh", 55.9541, -3.1920, "$$", 4.7, "Indian", "+44 131 202 6406", "3A St Andrew Square"),
            ("r7", "Contini", 55.9540, -3.1960, "$$", 4.4, "Italian", "+44 131 225 1550", "103 George St"),
            ("r8", "The Outsider", 55.9485, -3.1920, "$$", 4.4, "British", "+44 131 226 3131", "15 George IV Bridge"),
        ],
        "origin": "london",
        "origin_airport": ("London Heathrow Airport", "LHR"),
        "flights": [
            (1, "BA 1436", "outbound", 160, "2024-09-16 07:15", "2024-09-16 08:40", 85, ("Edinburgh Airport", "EDI"), "Airbus A320"),
            (2, "BA 1449", "return", 160, "2024-09-20 17:35", "2024-09-20 19:05", 90, ("Edinburgh Airport", "EDI"), "Airbus A320"),
        ],
        "airline": "British Airways",
    },
    "melbourne": {
        "city_name": "melbourne, victoria, australia",
        "center": (-37.8136, 144.9631),
        "weather": {"celsius": 17, "fahrenheit": 63, "conditions": "Cloudy"},
        "description": "Coastal Australian city known for laneway cafes, gardens, galleries and sport.",
        "tips": ["Trams inside the free tram zone cost nothing.", "Carry a jacket; four seasons in a day is common."],
        "sights": [
            (1, "Royal Botanic Gardens Victoria", -37.8304, 144.9796, ["Botanical garden"], "Free", 4.8, 2, [7, 18], ""),
            (2, "Queen Victoria Market", -37.8076, 144.9568, ["Market"], "Free", 4.5, 1.5, [7, 15], ""),
            (3, "Federation Square", -37.8180, 144.9691, ["Square", "Landmark"], "Free", 4.4, 1, [9, 21], ""),
            (4, "National Gallery of Victoria", -37.8226, 144.9689, ["Art museum"], "Free", 4.8, 2, [10, 17], ""),
            (5, "SEA LIFE Melbourne Aquarium", -37.8208, 144.9582, ["Aquarium"], "$32.00", 4.3, 2, [10, 17], ""),
            (6, "Melbourne Zoo", -37.7841, 144.9515, ["Zoo"], "$29.00", 4.5, 3, [9, 17], ""),
            (7, "Hosier Lane", -37.8165, 144.9690, ["Street", "Art gallery"], "Free", 4.4, 0.5, [9, 20], ""),
            (8, "St Kilda Beach", -37.8679, 144.9740, ["Beach"], "Free", 4.5, 2, [9, 19], ""),
            (9, "Melbourne Museum", -37.8033, 144.9717, ["Museum"], "$11.00", 4.6, 2, [9, 17], ""),
            (10, "Shrine of Remembrance", -37.8305, 144.9734, ["Monument", "Historical landmark"], "Free", 4.8, 1, [10, 17], ""),
            (11, "Eureka Skydeck", -37.8214, 144.9647, ["Observation deck"], "$28.00", 4.5, 1, [12, 22], ""),
            (12, "Fitzroy Gardens", -37.8129, 144.9804, ["Park", "Garden"], "Free", 4.7, 1, [7, 19], ""),
            (13, "Luna Park Melbourne", -37.8679, 144.9770, ["Amusement park"], "$40.00", 4.3, 2.5, [11, 20], ""),
            (14, "State Library Victoria", -37.8098, 144.9652, ["Library", "Landmark"], "Free", 4.8, 1, [10, 18], ""),
            (15, "Southbank Promenade", -37.8210, 144.9640, ["Promenade"], "Free", 4.5, 1, [9, 22], ""),
            (16, "St Patrick's Cathedral", -37.8101, 144.9762, ["Cathedral"], "Free", 4.8, 0.5, [8, 17], ""),
            (17, "Block Arcade", -37.8158, 144.9648, ["Shopping mall", "Historical landmark"], "Free", 4.6, 0.5, [9, 18], ""),
            (18, "Albert Park Lake", -37.8450, 144.9700, ["Park", "Lake"], "Free", 4.6, 1.5, [6, 19], ""),
            (19, "Old Melbourne Gaol", -37.8078, 144.9653, ["Museum", "Historical landmark"], "$25.00", 4.4, 1.5, [9, 17], ""),
            (20, "Scienceworks", -37.8300, 144.8980, ["Science museum"], "$17.00", 4.5, 2, [10, 16], ""),
        ],
        "hotels": [
            ("h1", "Melbourne Central YHA", -37.8166, 144.9557, "$55.00", 4.2, "2:00 PM", "10:00 AM", ["Rooftop"]),
            ("h2", "Hotel Indigo Melbourne", -37.8161, 144.9620, "$180.00", 4.5, "3:00 PM", "11:00 AM", ["Pool"]),
            ("h3", "Ibis Melbourne Central", -37.8100, 144.9630, "$120.00", 4.0, "2:00 PM", "11:00 AM", ["Breakfast"]),
            ("h4", "Crown Towers", -37.8230, 144.9580, "$420.00", 4.6, "3:00 PM", "11:00 AM", ["Spa"]),
        ],
        "restaurants": [
            ("r1", "Hook Seafood", -37.8150, 144.9650, "$$", 4.4, "Seafood", "+61 3 9654 0000", "Flinders Lane"),
            ("r2", "Rockpool Bar & Grill", -37.8235, 144.9585, "$$$$", 4.6, "Steak", "+61 3 8648 1900", "Crown Complex"),
            ("r3", "Claypots Evening Star", -37.8077, 144.9580, "$$", 4.5, "Seafood", "+61 3 9329 3929", "Queen Victoria Market"),
            ("r4", "Mr Jennings Seafood", -37.8200, 144.9680, "$$$", 4.4, "Seafood", "+61 3 9000 0000", "Southbank"),
            ("r5", "Chin Chin", -37.8163, 144.9700, "$$", 4.5, "Thai", "+61 3 8663 2000", "125 Flinders Ln"),
            ("r6", "Pellegrini's Espresso Bar", -37.8115, 144.9715, "$", 4.6, "Italian", "+61 3 9662 1885", "66 Bourke St"),
            ("r7", "The Atlantic", -37.8233, 144.9590, "$$$", 4.3, "Seafood", "+61 3 9698 8888", "Crown Riverwalk"),
            ("r8", "Stokehouse", -37.8640, 144.9750, "$$$", 4.5, "Seafood", "+61 3 9525 5555", "30 Jacka Blvd"),
        ],
        "origin": "sydney",
        "origin_airport": ("Sydney Kingsford Smith Airport", "SYD"),
        "flights": [
            (1, "QF 401", "outbound", 230, "2024-10-05 07:00", "2024-10-05 08:35", 95, ("Melbourne Airport", "MEL"), "Boeing 737"),
            (2, "QF 460", "return", 230, "2024-10-06 18:00", "2024-10-06 19:30", 90, ("Melbourne Airport", "MEL"), "Boeing 737"),
        ],
        "airline": "Qantas",
    },
    "vancouver": {
        "city_name": "vancouver, british columbia, canada",
        "center": (49.2827, -123.1207),
        "weather": {"celsius": 22, "fahrenheit": 72, "conditions": "Clear"},
        "description": "Seaport city framed by mountains, with a large waterfront park and lively neighbourhoods.",
        "tips": ["Rent a bike for the seawall.", "Bring rain gear outside summer."],
        "sights": [
            (1, "Stanley Park", 49.3043, -123.1443, ["Park"], "Free", 4.8, 3, [8, 19], ""),
            (2, "Granville Island Public Market", 49.2712, -123.1340, ["Market"], "Free", 4.6, 1.5, [9, 18], ""),
            (3, "Capilano Suspension Bridge Park", 49.3429, -123.1149, ["Park", "Bridge"], "$60.00", 4.6, 2, [9, 18], ""),
            (4, "Vancouver Aquarium", 49.3008, -123.1309, ["Aquarium"], "$40.00", 4.4, 2, [10, 17], ""),
            (5, "Gastown", 49.2844, -123.1089, ["Neighborhood", "Historical landmark"], "Free", 4.5, 1, [10, 21], ""),
            (6, "Queen Elizabeth Park", 49.2418, -123.1126, ["Park", "Garden"], "Free", 4.7, 1.5, [8, 19], ""),
            (7, "VanDusen Botanical Garden", 49.2386, -123.1290, ["Botanical garden"], "$13.00", 4.7, 2, [10, 18], ""),
            (8, "Science World", 49.2734, -123.1038, ["Science museum"], "$33.00", 4.5, 2.5, [10, 17], ""),
            (9, "Vancouver Art Gallery", 49.2829, -123.1204, ["Art museum"], "$24.00", 4.4, 1.5, [10, 17], ""),
            (10, "Canada Place", 49.2888, -123.1111, ["Landmark", "Promenade"], "Free", 4.6, 1, [9, 21], ""),
            (11, "Dr. Sun Yat-Sen Classical Chinese Garden", 49.2795, -123.1036, ["Garden"], "$16.00", 4.5, 1, [10, 17], ""),
            (12, "English Bay Beach", 49.2863, -123.1430, ["Beach"], "Free", 4.6, 1.5, [9, 21], ""),
            (13, "Museum of Anthropology", 49.2697, -123.2594, ["Museum"], "$20.00", 4.7, 2, [10, 17], ""),
            (14, "Grouse Mountain", 49.3801, -123.0823, ["Mountain", "Viewpoint"], "$75.00", 4.6, 3, [9, 20], ""),
            (15, "Kitsilano Beach", 49.2732, -123.1546, ["Beach", "Park"], "Free", 4.6, 1.5, [9, 20], ""),
            (16, "Robson Street", 49.2849, -123.1240, ["Shopping street"], "Free", 4.4, 1, [10, 21], ""),
            (17, "Vancouver Lookout", 49.2848, -123.1117, ["Observation deck"], "$18.00", 4.3, 1, [9, 21], ""),
            (18, "Bloedel Conservatory", 49.2417, -123.1132, ["Botanical garden"], "$9.00", 4.5, 1, [10, 17], ""),
            (19, "Steam Clock", 49.2844, -123.1089, ["Landmark"], "Free", 4.3, 0.5, [9, 21], ""),
            (20, "Lynn Canyon Park", 49.3438, -123.0183, ["Park", "Hiking area"], "Free", 4.8, 2, [8, 18], ""),
        ],
        "hotels": [
            ("h1", "HI Vancouver Downtown", 49.2806, -123.1282, "$60.00", 4.1, "3:00 PM", "11:00 AM", ["Kitchen"]),
            ("h2", "The Burrard", 49.2800, -123.1281, "$190.00", 4.4, "3:00 PM", "12:00 PM", ["Bikes"]),
            ("h3", "Sandman Hotel Vancouver City Centre", 49.2790, -123.1170, "$150.00", 4.0, "3:00 PM", "12:00 PM", ["Pool"]),
            ("h4", "Fairmont Pacific Rim", 49.2882, -123.1164, "$480.00", 4.7, "4:00 PM", "12:00 PM", ["Spa", "Pool"]),
        ],
        "restaurants": [
            ("r1", "Hy's Steakhouse", 49.2850, -123.1180, "$$$", 4.6, "Steak", "+1 604-683-7671", "637 Hornby St"),
            ("r2", "Gotham Steakhouse", 49.2847, -123.1194, "$$$$", 4.5, "Steak", "+1 604-605-8282", "615 Seymour St"),
            ("r3", "The Keg Steakhouse Granville", 49.2787, -123.1240, "$$", 4.4, "Steak", "+1 604-685-4735", "1011 Mainland St"),
            ("r4", "Miku", 49.2873, -123.1129, "$$$", 4.6, "Japanese", "+1 604-568-3900", "200 Granville St"),
            ("r5", "Nuba Gastown", 49.2835, -123.1040, "$$", 4.5, "Lebanese", "+1 604-688-1655", "207 W Hastings St"),
            ("r6", "Black + Blue", 49.2852, -123.1235, "$$$", 4.4, "Steak", "+1 604-637-0777", "1032 Alberni St"),
            ("r7", "Phnom Penh", 49.2793, -123.0985, "$", 4.5, "Cambodian", "+1 604-682-5777", "244 E Georgia St"),
            ("r8", "Joe Fortes", 49.2855, -123.1245, "$$$", 4.5, "Seafood", "+1 604-669-1940", "777 Thurlow St"),
        ],
        "origin": "toronto",
        "origin_airport": ("Toronto Pearson International Airport", "YYZ"),
        "flights": [
            (1, "AC 101", "outbound", 480, "2024-08-15 08:00", "2024-08-15 12:50", 290, ("Vancouver International Airport", "YVR"), "Boeing 787"),
            (2, "AC 110", "return", 480, "2024-08-18 13:00", "2024-08-18 17:30", 270, ("Vancouver International Airport", "YVR"), "Boeing 787"),
        ],
        "airline": "Air Canada",
    },
    "munich": {
        "city_name": "munich, bavaria, germany",
        "center": (48.1351, 11.5820),
        "weather": {"celsius": 21, "fahrenheit": 70, "conditions": "Sunny"},
        "description": "Bavarian capital with baroque squares, beer gardens and world-class museums.",
        "tips": ["A day ticket covers U-Bahn, S-Bahn and trams.", "Many shops close on Sundays."],
        "sights": [
            (1, "Marienplatz", 48.1374, 11.5755, ["Square", "Historical landmark"], "Free", 4.7, 1, [9, 21], ""),
            (2, "English Garden", 48.1642, 11.6054, ["Park"], "Free", 4.8, 2, [7, 20], ""),
            (3, "Nymphenburg Palace", 48.1583, 11.5033, ["Palace", "Garden"], "$9.00", 4.7, 2.5, [9, 18], ""),
            (4, "Deutsches Museum", 48.1299, 11.5834, ["Science museum"], "$16.00", 4.7, 3, [9, 17], ""),
            (5, "Viktualienmarkt", 48.1351, 11.5761, ["Market"], "Free", 4.6, 1, [8, 18], ""),
            (6, "Hellabrunn Zoo", 48.0976, 11.5550, ["Zoo"], "$20.00", 4.6, 3, [9, 18], ""),
            (7, "Munich Residenz", 48.1410, 11.5790, ["Palace", "Museum"], "$11.00", 4.7, 2, [9, 18], ""),
            (8, "Frauenkirche", 48.1386, 11.5736, ["Cathedral"], "Free", 4.6, 0.5, [8, 20], ""),
            (9, "Olympiapark", 48.1731, 11.5466, ["Park", "Landmark"], "Free", 4.7, 2, [8, 20], ""),
            (10, "BMW Welt", 48.1771, 11.5562, ["Museum", "Exhibition"], "Free", 4.6, 1.5, [9, 18], ""),
            (11, "Alte Pinakothek", 48.1482, 11.5700, ["Art museum"], "$8.00", 4.7, 2, [10, 18], ""),
            (12, "Hofgarten", 48.1424, 11.5801, ["Garden", "Park"], "Free", 4.6, 0.5, [8, 20], ""),
            (13, "St. Peter's Church Tower", 48.1365, 11.5757, ["Church", "Viewpoint"], "$5.00", 4.6, 0.5, [9, 18], ""),
            (14, "Eisbach Wave", 48.1434, 11.5878, ["Landmark"], "Free", 4.6, 0.5, [9, 20], ""),
            (15, "Asamkirche", 48.1350, 11.5694, ["Church"], "Free", 4.7, 0.5, [9, 18], ""),
            (16, "Hofbrauhaus", 48.1376, 11.5799, ["Beer hall", "Bar"], "$12.00", 4.4, 1.5, [11, 23], ""),
            (17, "Sea Life Munich", 48.1745, 11.5540, ["Aquarium"], "$22.00", 4.0, 1.5, [10, 18], ""),
            (18, "Odeonsplatz", 48.1425, 11.5774, ["Square", "Landmark"], "Free", 4.6, 0.5, [9, 21], ""),
            (19, "Pinakothek der Moderne", 48.1471, 11.5721, ["Art museum"], "$10.00", 4.5, 2, [10, 18], ""),
            (20, "Munich City Museum", 48.1350, 11.5729, ["Museum"], "$7.00", 4.4, 1.5, [10, 18], ""),
        ],
        "hotels": [
            ("h1", "Wombat's City Hostel Munich", 48.1397, 11.5615, "$50.00", 4.3, "2:00 PM", "10:00 AM", ["Bar"]),
            ("h2", "Motel One Munchen-Sendlinger Tor", 48.1345, 11.5667, "$130.00", 4.5, "3:00 PM", "12:00 PM", ["Lounge"]),
            ("h3", "Hotel Mio by Amano", 48.1405, 11.5600, "$140.00", 4.3, "3:00 PM", "12:00 PM", ["Rooftop"]),
            ("h4", "Hotel Bayerischer Hof", 48.1401, 11.5735, "$450.00", 4.7, "3:00 PM", "12:00 PM", ["Spa", "Pool"]),
        ],
        "restaurants": [
            ("r1", "Augustiner Klosterwirt", 48.1380, 11.5730, "$$", 4.5, "German", "+49 89 55056060", "Augustinerstrasse 1"),
            ("r2", "Schneider Brau", 48.1365, 11.5775, "$$", 4.5, "German", "+49 89 2901380", "Tal 7"),
            ("r3", "Ratskeller", 48.1375, 11.5760, "$$", 4.3, "German", "+49 89 2199890", "Marienplatz 8"),
            ("r4", "Zum Durnbrau", 48.1360, 11.5795, "$$", 4.4, "German", "+49 89 222195", "Durnbraugasse 2"),
            ("r5", "Wirtshaus Ayingers", 48.1380, 11.5800, "$$", 4.4, "German", "+49 89 23703666", "Platzl 1a"),
            ("r6", "Cotidiano", 48.1355, 11.5765, "$$", 4.3, "Cafe", "+49 89 24208061", "Gartnerplatz 6"),
            ("r7", "Pizzesco", 48.1400, 11.5710, "$", 4.4, "Italian", "+49 89 26949800", "Sendlinger Str 10"),
            ("r8", "Weisses Brauhaus", 48.1366, 11.5777, "$$", 4.5, "German", "+49 89 2901380", "Tal 10"),
        ],
        "origin": "berlin",
        "origin_airport": ("Berlin Brandenburg Airport", "BER"),
        "flights": [
            (1, "LH 1940", "outbound", 210, "2024-09-09 07:30", "2024-09-09 08:35", 65, ("Munich Airport", "MUC"), "Airbus A320"),
            (2, "LH 1953", "return", 210, "2024-09-10 17:00", "2024-09-10 18:05", 65, ("Munich Airport", "MUC"), "Airbus A320"),
        ],
        "airline": "Lufthansa",
    },
    "barcelona": {
        "city_name": "barcelona, catalonia, spain",
        "center": (41.3874, 2.1686),
        "weather": {"celsius": 26, "fahrenheit": 79, "conditions": "Sunny"},
        "description": "Mediterranean city of modernist architecture, beaches and late-night dining.",
        "tips": ["Book Sagrada Familia slots early.", "Dinner starts late; many kitchens open after 8 PM."],
        "sights": [
            (1, "Sagrada Familia", 41.4036, 2.1744, ["Basilica", "Landmark"], "$28.00", 4.8, 2, [9, 18], ""),
            (2, "Park Guell", 41.4145, 2.1527, ["Park", "Landmark"], "$11.00", 4.5, 2, [9, 19], ""),
            (3, "La Rambla", 41.3809, 2.1730, ["Street", "Shopping street"], "Free", 4.3, 1, [9, 22], ""),
            (4, "Casa Batllo", 41.3917, 2.1649, ["Museum", "Landmark"], "$38.00", 4.7, 1.5, [9, 20], ""),
            (5, "Gothic Quarter", 41.3839, 2.1763, ["Neighborhood", "Historical landmark"], "Free", 4.7, 2, [9, 21], ""),
            (6, "Barceloneta Beach", 41.3784, 2.1925, ["Beach"], "Free", 4.4, 2, [9, 20], ""),
            (7, "Aquarium Barcelona", 41.3767, 2.1841, ["Aquarium"], "$27.00", 4.3, 2, [10, 19], ""),
            (8, "Montjuic Castle", 41.3636, 2.1664, ["Castle", "Viewpoint"], "$5.00", 4.5, 1.5, [10, 20], ""),
            (9, "Picasso Museum", 41.3852, 2.1810, ["Art museum"], "$14.00", 4.4, 2, [10, 19], ""),
            (10, "La Boqueria Market", 41.3817, 2.1717, ["Market"], "Free", 4.4, 1, [8, 15], ""),
            (11, "Parc de la Ciutadella", 41.3881, 2.1874, ["Park"], "Free", 4.6, 1.5, [8, 20], ""),
            (12, "Casa Mila", 41.3954, 2.1620, ["Museum", "Landmark"], "$28.00", 4.6, 1.5, [9, 20], ""),
            (13, "Barcelona Cathedral", 41.3840, 2.1762, ["Cathedral"], "$10.00", 4.6, 1, [9, 18], ""),
            (14, "Magic Fountain of Montjuic", 41.3712, 2.1517, ["Fountain", "Landmark"], "Free", 4.5, 1, [18, 23], ""),
            (15, "Barcelona Zoo", 41.3870, 2.1898, ["Zoo"], "$24.00", 4.1, 3, [10, 18], ""),
            (16, "CosmoCaixa", 41.4132, 2.1310, ["Science museum"], "$7.00", 4.6, 2.5, [10, 20], ""),
            (17, "Palau de la Musica Catalana", 41.3875, 2.1753, ["Concert hall", "Landmark"], "$20.00", 4.7, 1, [10, 15], ""),
            (18, "Tibidabo Amusement Park", 41.4225, 2.1187, ["Amusement park"], "$35.00", 4.4, 3, [11, 19], ""),
            (19, "Arc de Triomf", 41.3910, 2.1806, ["Monument"], "Free", 4.6, 0.5, [9, 21], ""),
            (20, "Bunkers del Carmel", 41.4190, 2.1617, ["Viewpoint", "Historical landmark"], "Free", 4.7, 1, [16, 21], ""),
        ],
        "hotels": [
            ("h1", "Generator Barcelona", 41.3980, 2.1610, "$55.00", 4.1, "3:00 PM", "11:00 AM", ["Bar"]),
            ("h2", "Hotel Catalonia Portal de l'Angel", 41.3860, 2.1720, "$170.00", 4.5, "3:00 PM", "12:00 PM", ["Pool"]),
            ("h3", "Ibis Barcelona Centro", 41.3980, 2.1820, "$110.00", 4.0, "2:00 PM", "12:00 PM", ["Breakfast"]),
            ("h4", "Hotel Arts Barcelona", 41.3867, 2.1963, "$430.00", 4.6, "3:00 PM", "12:00 PM", ["Pool", "Spa"]),
        ],
        "restaurants": [
            ("r1", "Bistrot Levante", 41.3830, 2.1775, "$$", 4.5, "French", "+34 93 000 0001", "Placeta de Manuel Ribe 1"),
            ("r2", "Le Cucine Mandarosso", 41.3865, 2.1795, "$$", 4.6, "Italian", "+34 93 269 0780", "Carrer de Verdaguer i Callis 4"),
            ("r3", "La Chassagne", 41.3905, 2.1610, "$$$", 4.6, "French", "+34 93 000 0002", "Carrer de Muntaner 44"),
            ("r4", "Cerveceria Catalana", 41.3930, 2.1612, "$$", 4.5, "Spanish", "+34 93 216 0368", "Carrer de Mallorca 236"),
            ("r5", "El Xampanyet", 41.3845, 2.1817, "$", 4.4, "Spanish", "+34 93 319 7003", "Carrer de Montcada 22"),
            ("r6", "Bar Canete", 41.3790, 2.1730, "$$", 4.6, "Spanish", "+34 93 270 3458", "Carrer de la Unio 17"),
            ("r7", "Chez Coco", 41.3955, 2.1545, "$$$", 4.3, "French", "+34 93 000 0003", "Avinguda Diagonal 465"),
            ("r8", "Can Solé", 41.3790, 2.1895, "$$", 4.4, "Seafood", "+34 93 221 5012", "Carrer de Sant Carles 4"),
        ],
        "origin": "madrid",
        "origin_airport": ("Adolfo Suarez Madrid-Barajas Airport", "MAD"),
        "flights": [
            (1, "IB 2720", "outbound", 150, "2024-09-21 08:00", "2024-09-21 09:15", 75, ("Barcelona El Prat Airport", "BCN"), "Airbus A321"),
            (2, "IB 2741", "return", 150, "2024-09-25 18:30", "2024-09-25 19:45", 75, ("Barcelona El Prat Airport", "BCN"), "Airbus A321"),
        ],
        "airline": "Iberia",
    },
    "florence": {
        "city_name": "florence, tuscany, italy",
        "center": (43.7696, 11.2558),
        "weather": {"celsius": 24, "fahrenheit": 75, "conditions": "Clear"},
        "description": "Renaissance city on the Arno with celebrated galleries, churches and hillside gardens.",
        "tips": ["Reserve Uffizi and Accademia entries.", "The historic centre is compact and walkable."],
        "sights": [
            (1, "Uffizi Gallery", 43.7687, 11.2559, ["Art museum"], "$27.00", 4.7, 3, [9, 18], ""),
            (2, "Florence Cathedral", 43.7731, 11.2560, ["Cathedral", "Landmark"], "Free", 4.8, 1, [10, 16], ""),
            (3, "Ponte Vecchio", 43.7680, 11.2531, ["Bridge", "Historical landmark"], "Free", 4.7, 0.5, [9, 22], ""),
            (4, "Galleria dell'Accademia", 43.7768, 11.2587, ["Art museum"], "$17.00", 4.6, 1.5, [9, 18], ""),
            (5, "Boboli Gardens", 43.7625, 11.2486, ["Garden", "Park"], "$11.00", 4.5, 2, [9, 18], ""),
            (6, "Piazzale Michelangelo", 43.7629, 11.2651, ["Viewpoint", "Square"], "Free", 4.8, 1, [16, 21], ""),
            (7, "Palazzo Vecchio", 43.7693, 11.2563, ["Museum", "Palace"], "$14.00", 4.7, 1.5, [9, 19], ""),
            (8, "Basilica of Santa Croce", 43.7686, 11.2621, ["Basilica"], "$9.00", 4.7, 1, [9, 17], ""),
            (9, "Mercato Centrale", 43.7764, 11.2532, ["Market"], "Free", 4.4, 1, [9, 21], ""),
            (10, "Pitti Palace", 43.7651, 11.2500, ["Palace", "Museum"], "$17.00", 4.6, 2, [9, 18], ""),
            (11, "Piazza della Signoria", 43.7696, 11.2556, ["Square", "Landmark"], "Free", 4.8, 0.5, [9, 22], ""),
            (12, "Giotto's Campanile", 43.7729, 11.2555, ["Tower", "Viewpoint"], "$22.00", 4.7, 1, [9, 19], ""),
            (13, "Basilica of San Lorenzo", 43.7747, 11.2540, ["Basilica"], "$10.00", 4.5, 1, [10, 17], ""),
            (14, "Bardini Garden", 43.7645, 11.2580, ["Garden"], "$11.00", 4.6, 1, [9, 18], ""),
            (15, "Museo Galileo", 43.7677, 11.2563, ["Science museum"], "$11.00", 4.6, 1.5, [10, 18], ""),
            (16, "San Miniato al Monte", 43.7594, 11.2648, ["Church", "Viewpoint"], "Free", 4.8, 1, [9, 19], ""),
            (17, "Santa Maria Novella", 43.7746, 11.2491, ["Basilica"], "$8.00", 4.7, 1, [9, 17], ""),
            (18, "Cascine Park", 43.7830, 11.2300, ["Park"], "Free", 4.2, 1.5, [7, 19], ""),
            (19, "Oltrarno Artisan Quarter", 43.7660, 11.2470, ["Neighborhood", "Shopping area"], "Free", 4.5, 1.5, [10, 19], ""),
            (20, "Mercato Nuovo", 43.7707, 11.2540, ["Market"], "Free", 4.3, 0.5, [9, 19], ""),
        ],
        "hotels": [
            ("h1", "Plus Florence", 43.7825, 11.2510, "$60.00", 4.1, "2:00 PM", "10:00 AM", ["Pool"]),
            ("h2", "Hotel Spadai", 43.7743, 11.2560, "$210.00", 4.7, "2:00 PM", "11:00 AM", ["Breakfast"]),
            ("h3", "Hotel Davanzati", 43.7705, 11.2530, "$180.00", 4.8, "2:00 PM", "11:00 AM", ["Bar"]),
            ("h4", "Hotel Lungarno", 43.7670, 11.2520, "$520.00", 4.7, "3:00 PM", "12:00 PM", ["River view"]),
        ],
        "restaurants": [
            ("r1", "Trattoria Mario", 43.7765, 11.2538, "$", 4.6, "Italian", "+39 055 218550", "Via Rosina 2r"),
            ("r2", "All'Antico Vinaio", 43.7680, 11.2572, "$", 4.6, "Italian", "+39 055 238 2723", "Via dei Neri 74r"),
            ("r3", "Osteria Santo Spirito", 43.7665, 11.2466, "$$", 4.4, "Italian", "+39 055 238 2383", "Piazza Santo Spirito 16r"),
            ("r4", "Trattoria Sostanza", 43.7730, 11.2480, "$$", 4.5, "Italian", "+39 055 212691", "Via del Porcellana 25r"),
            ("r5", "Il Latini", 43.7715, 11.2500, "$$", 4.4, "Italian", "+39 055 210916", "Via dei Palchetti 6r"),
            ("r6", "Gelateria dei Neri", 43.7685, 11.2590, "$", 4.6, "Dessert", "+39 055 210034", "Via dei Neri 9r"),
            ("r7", "Osteria Vini e Vecchi Sapori", 43.7697, 11.2566, "$$", 4.5, "Italian", "+39 055 293045", "Via dei Magazzini 3r"),
            ("r8", "Buca Mario", 43.7722, 11.2494, "$$$", 4.4, "Italian", "+39 055 214179", "Piazza degli Ottaviani 16r"),
        ],
        "origin": "rome",
        "origin_airport": ("Rome Fiumicino Airport", "FCO"),
        "flights": [
            (1, "AZ 1671", "outbound", 140, "2024-10-02 08:00", "2024-10-02 09:05", 65, ("Florence Airport", "FLR"), "Embraer 190"),
            (2, "AZ 1676", "return", 140, "2024-10-05 18:00", "2024-10-05 19:05", 65, ("Florence Airport", "FLR"), "Embraer 190"),
        ],
        "airline": "ITA Airways",
    },
    "kyoto": {
        "city_name": "kyoto, kyoto, japan",
        "center": (35.0116, 135.7681),
        "weather": {"celsius": 33, "fahrenheit": 91, "conditions": "Humid"},
        "description": "Former imperial capital with hundreds of temples, shrines and traditional wooden streets.",
        "tips": ["Buses get crowded; consider a day pass.", "Temples open early and close around 5 PM."],
        "sights": [
            (1, "Fushimi Inari Taisha", 34.9671, 135.7727, ["Shinto shrine"], "Free", 4.7, 2, [6, 17], ""),
            (2, "Kinkaku-ji", 35.0394, 135.7292, ["Buddhist temple", "Garden"], "$3.00", 4.6, 1, [9, 17], ""),
            (3, "Kiyomizu-dera", 34.9949, 135.7850, ["Buddhist temple"], "$3.00", 4.6, 1.5, [6, 18], ""),
            (4, "Arashiyama Bamboo Grove", 35.0170, 135.6713, ["Park", "Nature"], "Free", 4.4, 1, [6, 11], ""),
            (5, "Nishiki Market", 35.0050, 135.7649, ["Market"], "Free", 4.3, 1, [10, 17], ""),
            (6, "Gion", 35.0037, 135.7788, ["Neighborhood", "Historical landmark"], "Free", 4.4, 1.5, [16, 21], ""),
            (7, "Kyoto Aquarium", 34.9875, 135.7447, ["Aquarium"], "$15.00", 4.2, 2, [10, 18], ""),
            (8, "Nijo Castle", 35.0142, 135.7482, ["Castle", "Garden"], "$9.00", 4.5, 1.5, [9, 16], ""),
            (9, "Ginkaku-ji", 35.0270, 135.7982, ["Buddhist temple", "Garden"], "$3.00", 4.5, 1, [9, 17], ""),
            (10, "Philosopher's Path", 35.0266, 135.7951, ["Promenade", "Park"], "Free", 4.5, 1, [8, 18], ""),
            (11, "Kyoto Imperial Palace", 35.0254, 135.7621, ["Palace", "Park"], "Free", 4.4, 1.5, [9, 16], ""),
            (12, "Sanjusangen-do", 34.9880, 135.7717, ["Buddhist temple"], "$4.00", 4.7, 1, [9, 17], ""),
            (13, "Tenryu-ji", 35.0158, 135.6737, ["Buddhist temple", "Garden"], "$4.00", 4.6, 1, [9, 17], ""),
            (14, "Kyoto Railway Museum", 34.9870, 135.7430, ["Museum"], "$9.00", 4.6, 2, [10, 17], ""),
            (15, "Yasaka Shrine", 35.0036, 135.7785, ["Shinto shrine"], "Free", 4.4, 0.5, [8, 21], ""),
            (16, "Kyoto Tower", 34.9875, 135.7594, ["Observation deck"], "$6.00", 4.1, 1, [10, 21], ""),
            (17, "Pontocho Alley", 35.0060, 135.7710, ["Street"], "Free", 4.4, 0.5, [17, 22], ""),
            (18, "Kyoto Botanical Gardens", 35.0497, 135.7622, ["Botanical garden"], "$2.00", 4.5, 1.5, [9, 17], ""),
            (19, "Toji Temple", 34.9806, 135.7478, ["Buddhist temple"], "$5.00", 4.5, 1, [8, 17], ""),
            (20, "Kyoto International Manga Museum", 35.0116, 135.7594, ["Museum"], "$8.00", 4.2, 1.5, [10, 18], ""),
        ],
        "hotels": [
            ("h1", "Piece Hostel Sanjo", 35.0090, 135.7720, "$40.00", 4.5, "3:00 PM", "11:00 AM", ["Kitchen"]),
            ("h2", "Hotel Granvia Kyoto", 34.9858, 135.7588, "$200.00", 4.4, "3:00 PM", "12:00 PM", ["Spa"]),
            ("h3", "Daiwa Roynet Hotel Kyoto", 35.0030, 135.7600, "$110.00", 4.2, "2:00 PM", "11:00 AM", ["Breakfast"]),
            ("h4", "The Ritz-Carlton Kyoto", 35.0130, 135.7725, "$900.00", 4.8, "3:00 PM", "12:00 PM", ["Spa", "Pool"]),
        ],
        "restaurants": [
            ("r1", "Kichi Kichi Omurice", 35.0100, 135.7700, "$$", 4.5, "Japanese", "+81 75-211-5411", "185-4 Zaimokucho"),
            ("r2", "Menbaka Fire Ramen", 35.0190, 135.7490, "$", 4.4, "Japanese", "+81 75-803-5589", "757-2 Minamiiseyacho"),
            ("r3", "Gion Karyo", 35.0020, 135.7755, "$$$", 4.6, "Japanese", "+81 75-532-0025", "570-235 Gionmachi"),
            ("r4", "Omen Ginkakuji", 35.0255, 135.7930, "$$", 4.3, "Japanese", "+81 75-771-8994", "74 Jodoji Ishibashicho"),
            ("r5", "Ippudo Nishiki", 35.0052, 135.7630, "$", 4.2, "Japanese", "+81 75-213-8800", "653-1 Bantoyacho"),
            ("r6", "Pizzeria da Ciro", 35.0110, 135.7680, "$$", 4.3, "Italian", "+81 75-000-0000", "Nakagyo"),
            ("r7", "Nishiki Warai", 35.0051, 135.7637, "$", 4.3, "Japanese", "+81 75-257-5966", "Nishikikoji"),
            ("r8", "Yudofu Sagano", 35.0160, 135.6745, "$$$", 4.5, "Japanese", "+81 75-871-6946", "45 Susukinobabacho"),
        ],
        "origin": "tokyo",
        "origin_airport": ("Tokyo Haneda Airport", "HND"),
        "flights": [
            (1, "JL 101", "outbound", 190, "2024-08-25 07:30", "2024-08-25 08:40", 70, ("Osaka Itami Airport", "ITM"), "Boeing 767"),
            (2, "JL 130", "return", 190, "2024-08-27 18:00", "2024-08-27 19:10", 70, ("Osaka Itami Airport", "ITM"), "Boeing 767"),
        ],
        "airline": "Japan Airlines",
    },
}


def reason_for(name, types, price):
    kind = types[0].lower()
    cost = "free to enter" if price in (None, "Free") else f"priced at {price} per person"
    return f"{name} is a well-rated {kind}, {cost}."


def sight_record(index, row, city_label):
    sid, name, lat, lon, types, price, rating, duration, window, address = row
    details = {
        "sight_name": name,
        "type": "[" + ", ".join(f"'{t}'" for t in types) + "]",
        "address": address or f"{name}, {city_label}",
        "latitude": lat,
        "longitude": lon,
        "per_price": price,
        "overall_rating": rating,
        "description": f"{types[0]} in {city_label.split(',')[0].title()}.",
        "operating_hours": None,
        "image": None,
        "phone": None,
        "llm_recommend_reason": reason_for(name, types, price),
        "llm_recommend_duration": duration,
        "llm_recommend_play_time": f"[{window[0]}, {window[1]}]",
    }
    return {"index": index, "image": None, "sight_name": name, "details": details, "id": sid}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for key, c in CITIES.items():
        label = c["city_name"]
        doc = {
            "key": key,
            "city": {
                "city_name": label,
                "description": c["description"],
                "weather": c["weather"],
                "latitude": c["center"][0],
                "longitude": c["center"][1],
            },
            "tips": c["tips"],
            "sights": [sight_record(i, row, label) for i, row in enumerate(c["sights"])],
            "hotels": [
                {"id": hid, "name": name, "address": f"{name}, {label}", "latitude": lat, "longitude": lon,
                 "price_per_night": price, "rating": rating, "check_in_time": cin, "check_out_time": cout,
                 "amenities": amen}
                for hid, name, lat, lon, price, rating, cin, cout, amen in c["hotels"]
            ],
            "restaurants": [
                {"id": rid, "name": name, "address": address, "latitude": lat, "longitude": lon, "price": band,
                 "rating": rating, "cuisine": cuisine, "phone": phone}
                for rid, name, lat, lon, band, rating, cuisine, phone, address in c["restaurants"]
            ],
            "flights": {c["origin"]: []},
        }
        origin_airport = {"name": c["origin_airport"][0], "id": c["origin_airport"][1]}
        for fid, number, direction, price, dep, arr, minutes, airport, plane in c["flights"]:
            city_airport = {"name": airport[0], "id": airport[1]}
            doc["flights"][c["origin"]].append({
                "id": fid, "flight_number": number, "outbound_or_return": direction, "round_trip_price": price,
                "type": "Round trip", "travel_class": "Economy", "total_duration": minutes,
                "departure_time": dep, "arrival_time": arr,
                "departure_airport": origin_airport if direction == "outbound" else city_airport,
                "arrival_airport": city_airport if direction == "outbound" else origin_airport,
                "layovers": "[]", "airplane": plane, "airline": c["airline"],
            })
        path = OUT / (key.replace(" ", "_") + ".json")
        path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
        print(path)


if __name__ == "__main__":
    main()
