#!/usr/bin/env python3
"""Regenerate the bundled offline gazetteer (src/eod/fixtures_data/cities.tsv).

Coordinates are city centroids rounded to a few decimals, sourced once from
public gazetteer data; confidence reflects how unambiguous the plain name is.
"""

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "eod" / "fixtures_data" / "cities.tsv"

# name, lat, lon, confidence
CITIES = [
    ("Berlin, Germany", 52.52, 13.405, 0.9),
    ("Munich, Germany", 48.1374, 11.5755, 0.9),
    ("Hamburg, Germany", 53.5511, 9.9937, 0.9),
    ("Cologne, Germany", 50.9375, 6.9603, 0.9),
    ("Frankfurt, Germany", 50.1109, 8.6821, 0.85),
    ("Stuttgart, Germany", 48.7758, 9.1829, 0.9),
    ("Dresden, Germany", 51.0504, 13.7373, 0.9),
    ("Leipzig, Germany", 51.3397, 12.3731, 0.9),
    ("Potsdam, Germany", 52.3906, 13.0645, 0.9),
    ("Bonn, Germany", 50.7374, 7.0982, 0.9),
    ("Paris, France", 48.8566, 2.3522, 0.9),
    ("Lyon, France", 45.764, 4.8357, 0.9),
    ("Marseille, France", 43.2965, 5.3698, 0.9),
    ("Toulouse, France", 43.6047, 1.4442, 0.9),
    ("Nice, France", 43.7102, 7.262, 0.9),
    ("Grenoble, France", 45.1885, 5.7245, 0.9),
    ("London, United Kingdom", 51.5074, -0.1278, 0.9),
    ("Manchester, United Kingdom", 53.4808, -2.2426, 0.9),
    ("Edinburgh, United Kingdom", 55.9533, -3.1883, 0.9),
    ("Glasgow, United Kingdom", 55.8642, -4.2518, 0.9),
    ("Birmingham, United Kingdom", 52.4862, -1.8904, 0.8),
    ("Bristol, United Kingdom", 51.4545, -2.5879, 0.85),
    ("Oxford, United Kingdom", 51.752, -1.2577, 0.9),
    ("Cambridge, United Kingdom", 52.2053, 0.1218, 0.8),
    ("Madrid, Spain", 40.4168, -3.7038, 0.9),
    ("Barcelona, Spain", 41.3851, 2.1734, 0.9),
    ("Valencia, Spain", 39.4699, -0.3763, 0.85),
    ("Seville, Spain", 37.3891, -5.9845, 0.9),
    ("Lisbon, Portugal", 38.7223, -9.1393, 0.9),
    ("Porto, Portugal", 41.1579, -8.6291, 0.9),
    ("Rome, Italy", 41.9028, 12.4964, 0.9),
    ("Milan, Italy", 45.4642, 9.19, 0.9),
    ("Naples, Italy", 40.8518, 14.2681, 0.9),
    ("Turin, Italy", 45.0703, 7.6869, 0.9),
    ("Venice, Italy", 45.4408, 12.3155, 0.9),
    ("Florence, Italy", 43.7696, 11.2558, 0.9),
    ("Bologna, Italy", 44.4949, 11.3426, 0.9),
    ("Amsterdam, Netherlands", 52.3676, 4.9041, 0.9),
    ("Rotterdam, Netherlands", 51.9244, 4.4777, 0.9),
    ("The Hague, Netherlands", 52.0705, 4.3007, 0.9),
    ("Utrecht, Netherlands", 52.0907, 5.1214, 0.9),
    ("Brussels, Belgium", 50.8503, 4.3517, 0.9),
    ("Antwerp, Belgium", 51.2194, 4.4025, 0.9),
    ("Ghent, Belgium", 51.0543, 3.7174, 0.9),
    ("Vienna, Austria", 48.2082, 16.3738, 0.9),
    ("Graz, Austria", 47.0707, 15.4395, 0.9),
    ("Innsbruck, Austria", 47.2692, 11.4041, 0.9),
    ("Zurich, Switzerland", 47.3769, 8.5417, 0.9),
    ("Geneva, Switzerland", 46.2044, 6.1432, 0.9),
    ("Bern, Switzerland", 46.948, 7.4474, 0.9),
    ("Lausanne, Switzerland", 46.5197, 6.6323, 0.9),
    ("Copenhagen, Denmark", 55.6761, 12.5683, 0.9),
    ("Aarhus, Denmark", 56.1629, 10.2039, 0.9),
    ("Stockholm, Sweden", 59.3293, 18.0686, 0.9),
    ("Gothenburg, Sweden", 57.7089, 11.9746, 0.9),
    ("Malmo, Sweden", 55.605, 13.0038, 0.9),
    ("Oslo, Norway", 59.9139, 10.7522, 0.9),
    ("Bergen, Norway", 60.3913, 5.3221, 0.85),
    ("Tromso, Norway", 69.6492, 18.9553, 0.9),
    ("Helsinki, Finland", 60.1699, 24.9384, 0.9),
    ("Espoo, Finland", 60.2055, 24.6559, 0.9),
    ("Reykjavik, Iceland", 64.1466, -21.9426, 0.9),
    ("Dublin, Ireland", 53.3498, -6.2603, 0.9),
    ("Cork, Ireland", 51.8985, -8.4756, 0.85),
    ("Warsaw, Poland", 52.2297, 21.0122, 0.9),
    ("Krakow, Poland", 50.0647, 19.945, 0.9),
    ("Wroclaw, Poland", 51.1079, 17.0385, 0.9),
    ("Gdansk, Poland", 54.352, 18.6466, 0.9),
    ("Prague, Czech Republic", 50.0755, 14.4378, 0.9),
    ("Brno, Czech Republic", 49.1951, 16.6068, 0.9),
    ("Bratislava, Slovakia", 48.1486, 17.1077, 0.9),
    ("Budapest, Hungary", 47.4979, 19.0402, 0.9),
    ("Bucharest, Romania", 44.4268, 26.1025, 0.9),
    ("Cluj-Napoca, Romania", 46.7712, 23.6236, 0.9),
    ("Sofia, Bulgaria", 42.6977, 23.3219, 0.9),
    ("Athens, Greece", 37.9838, 23.7275, 0.9),
    ("Thessaloniki, Greece", 40.6401, 22.9444, 0.9),
    ("Zagreb, Croatia", 45.815, 15.9819, 0.9),
    ("Ljubljana, Slovenia", 46.0569, 14.5058, 0.9),
    ("Belgrade, Serbia", 44.7866, 20.4489, 0.9),
    ("Sarajevo, Bosnia and Herzegovina", 43.8563, 18.4131, 0.9),
    ("Skopje, North Macedonia", 41.9973, 21.428, 0.9),
    ("Tirana, Albania", 41.3275, 19.8187, 0.9),
    ("Vilnius, Lithuania", 54.6872, 25.2797, 0.9),
    ("Riga, Latvia", 56.9496, 24.1052, 0.9),
    ("Tallinn, Estonia", 59.437, 24.7536, 0.9),
    ("Kyiv, Ukraine", 50.4501, 30.5234, 0.9),
    ("Lviv, Ukraine", 49.8397, 24.0297, 0.9),
    ("Minsk, Belarus", 53.9006, 27.559, 0.9),
    ("Moscow, Russia", 55.7558, 37.6173, 0.9),
    ("Saint Petersburg, Russia", 59.9311, 30.3609, 0.9),
    ("Novosibirsk, Russia", 55.0084, 82.9357, 0.9),
    ("Yekaterinburg, Russia", 56.8389, 60.6057, 0.9),
    ("Istanbul, Turkey", 41.0082, 28.9784, 0.9),
    ("Ankara, Turkey", 39.9334, 32.8597, 0.9),
    ("Izmir, Turkey", 38.4237, 27.1428, 0.9),
    ("New York, USA", 40.7128, -74.006, 0.9),
    ("Los Angeles, USA", 34.0522, -118.2437, 0.9),
    ("Chicago, USA", 41.8781, -87.6298, 0.9),
    ("Houston, USA", 29.7604, -95.3698, 0.9),
    ("Phoenix, USA", 33.4484, -112.074, 0.9),
    ("Philadelphia, USA", 39.9526, -75.1652, 0.9),
    ("San Antonio, USA", 29.4241, -98.4936, 0.9),
    ("San Diego, USA", 32.7157, -117.1611, 0.9),
    ("Dallas, USA", 32.7767, -96.797, 0.9),
    ("San Francisco, USA", 37.7749, -122.4194, 0.9),
    ("Seattle, USA", 47.6062, -122.3321, 0.9),
    ("Denver, USA", 39.7392, -104.9903, 0.9),
    ("Boston, USA", 42.3601, -71.0589, 0.9),
    ("Washington, USA", 38.9072, -77.0369, 0.8),
    ("Miami, USA", 25.7617, -80.1918, 0.9),
    ("Atlanta, USA", 33.749, -84.388, 0.9),
    ("Minneapolis, USA", 44.9778, -93.265, 0.9),
    ("Portland, USA", 45.5152, -122.6784, 0.8),
    ("Anchorage, USA", 61.2181, -149.9003, 0.9),
    ("Honolulu, USA", 21.3069, -157.8583, 0.9),
    ("Toronto, Canada", 43.6532, -79.3832, 0.9),
    ("Montreal, Canada", 45.5017, -73.5673, 0.9),
    ("Vancouver, Canada", 49.2827, -123.1207, 0.9),
    ("Calgary, Canada", 51.0447, -114.0719, 0.9),
    ("Ottawa, Canada", 45.4215, -75.6972, 0.9),
    ("Edmonton, Canada", 53.5461, -113.4938, 0.9),
    ("Winnipeg, Canada", 49.8951, -97.1384, 0.9),
    ("Halifax, Canada", 44.6488, -63.5752, 0.9),
    ("Mexico City, Mexico", 19.4326, -99.1332, 0.9),
    ("Guadalajara, Mexico", 20.6597, -103.3496, 0.9),
    ("Monterrey, Mexico", 25.6866, -100.3161, 0.9),
    ("Guatemala City, Guatemala", 14.6349, -90.5069, 0.9),
    ("San Jose, Costa Rica", 9.9281, -84.0907, 0.8),
    ("Panama City, Panama", 8.9824, -79.5199, 0.85),
    ("Havana, Cuba", 23.1136, -82.3666, 0.9),
    ("Kingston, Jamaica", 17.9712, -76.7936, 0.85),
    ("Bogota, Colombia", 4.711, -74.0721, 0.9),
    ("Medellin, Colombia", 6.2476, -75.5658, 0.9),
    ("Caracas, Venezuela", 10.4806, -66.9036, 0.9),
    ("Quito, Ecuador", -0.1807, -78.4678, 0.9),
    ("Lima, Peru", -12.0464, -77.0428, 0.9),
    ("La Paz, Bolivia", -16.4897, -68.1193, 0.9),
    ("Santiago, Chile", -33.4489, -70.6693, 0.9),
    ("Valparaiso, Chile", -33.0472, -71.6127, 0.9),
    ("Buenos Aires, Argentina", -34.6037, -58.3816, 0.9),
    ("Cordoba, Argentina", -31.4201, -64.1888, 0.85),
    ("Montevideo, Uruguay", -34.9011, -56.1645, 0.9),
    ("Asuncion, Paraguay", -25.2637, -57.5759, 0.9),
    ("Sao Paulo, Brazil", -23.5505, -46.6333, 0.9),
    ("Rio de Janeiro, Brazil", -22.9068, -43.1729, 0.9),
    ("Brasilia, Brazil", -15.8267, -47.9218, 0.9),
    ("Manaus, Brazil", -3.119, -60.0217, 0.9),
    ("Recife, Brazil", -8.0476, -34.877, 0.9),
    ("Porto Alegre, Brazil", -30.0346, -51.2177, 0.9),
    ("Cairo, Egypt", 30.0444, 31.2357, 0.9),
    ("Alexandria, Egypt", 31.2001, 29.9187, 0.85),
    ("Casablanca, Morocco", 33.5731, -7.5898, 0.9),
    ("Rabat, Morocco", 34.0209, -6.8416, 0.9),
    ("Tunis, Tunisia", 36.8065, 10.1815, 0.9),
    ("Algiers, Algeria", 36.7538, 3.0588, 0.9),
    ("Tripoli, Libya", 32.8872, 13.1913, 0.85),
    ("Lagos, Nigeria", 6.5244, 3.3792, 0.9),
    ("Abuja, Nigeria", 9.0765, 7.3986, 0.9),
    ("Accra, Ghana", 5.6037, -0.187, 0.9),
    ("Dakar, Senegal", 14.7167, -17.4677, 0.9),
    ("Abidjan, Ivory Coast", 5.36, -4.0083, 0.9),
    ("Kinshasa, DR Congo", -4.4419, 15.2663, 0.9),
    ("Nairobi, Kenya", -1.2921, 36.8219, 0.9),
    ("Addis Ababa, Ethiopia", 9.0192, 38.7525, 0.9),
    ("Dar es Salaam, Tanzania", -6.7924, 39.2083, 0.9),
    ("Kampala, Uganda", 0.3476, 32.5825, 0.9),
    ("Kigali, Rwanda", -1.9441, 30.0619, 0.9),
    ("Lusaka, Zambia", -15.3875, 28.3228, 0.9),
    ("Harare, Zimbabwe", -17.8252, 31.0335, 0.9),
    ("Johannesburg, South Africa", -26.2041, 28.0473, 0.9),
    ("Cape Town, South Africa", -33.9249, 18.4241, 0.9),
    ("Durban, South Africa", -29.8587, 31.0218, 0.9),
    ("Pretoria, South Africa", -25.7479, 28.2293, 0.9),
    ("Antananarivo, Madagascar", -18.8792, 47.5079, 0.9),
    ("Tel Aviv, Israel", 32.0853, 34.7818, 0.9),
    ("Jerusalem, Israel", 31.7683, 35.2137, 0.85),
    ("Amman, Jordan", 31.9454, 35.9284, 0.9),
    ("Beirut, Lebanon", 33.8938, 35.5018, 0.9),
    ("Riyadh, Saudi Arabia", 24.7136, 46.6753, 0.9),
    ("Jeddah, Saudi Arabia", 21.4858, 39.1925, 0.9),
    ("Dubai, UAE", 25.2048, 55.2708, 0.9),
    ("Abu Dhabi, UAE", 24.4539, 54.3773, 0.9),
    ("Doha, Qatar", 25.2854, 51.531, 0.9),
    ("Kuwait City, Kuwait", 29.3759, 47.9774, 0.9),
    ("Tehran, Iran", 35.6892, 51.389, 0.9),
    ("Baghdad, Iraq", 33.3152, 44.3661, 0.9),
    ("Karachi, Pakistan", 24.8607, 67.0011, 0.9),
    ("Lahore, Pakistan", 31.5204, 74.3587, 0.9),
    ("Islamabad, Pakistan", 33.6844, 73.0479, 0.9),
    ("Delhi, India", 28.7041, 77.1025, 0.9),
    ("Mumbai, India", 19.076, 72.8777, 0.9),
    ("Bangalore, India", 12.9716, 77.5946, 0.9),
    ("Chennai, India", 13.0827, 80.2707, 0.9),
    ("Kolkata, India", 22.5726, 88.3639, 0.9),
    ("Hyderabad, India", 17.385, 78.4867, 0.85),
    ("Dhaka, Bangladesh", 23.8103, 90.4125, 0.9),
    ("Kathmandu, Nepal", 27.7172, 85.324, 0.9),
    ("Colombo, Sri Lanka", 6.9271, 79.8612, 0.9),
    ("Yangon, Myanmar", 16.8661, 96.1951, 0.9),
    ("Bangkok, Thailand", 13.7563, 100.5018, 0.9),
    ("Hanoi, Vietnam", 21.0278, 105.8342, 0.9),
    ("Ho Chi Minh City, Vietnam", 10.8231, 106.6297, 0.9),
    ("Phnom Penh, Cambodia", 11.5564, 104.9282, 0.9),
    ("Kuala Lumpur, Malaysia", 3.139, 101.6869, 0.9),
    ("Singapore", 1.3521, 103.8198, 0.9),
    ("Jakarta, Indonesia", -6.2088, 106.8456, 0.9),
    ("Surabaya, Indonesia", -7.2575, 112.7521, 0.9),
    ("Manila, Philippines", 14.5995, 120.9842, 0.9),
    ("Beijing, China", 39.9042, 116.4074, 0.9),
    ("Shanghai, China", 31.2304, 121.4737, 0.9),
    ("Shenzhen, China", 22.5431, 114.0579, 0.9),
    ("Guangzhou, China", 23.1291, 113.2644, 0.9),
    ("Chengdu, China", 30.5728, 104.0668, 0.9),
    ("Wuhan, China", 30.5928, 114.3055, 0.9),
    ("Xian, China", 34.3416, 108.9398, 0.9),
    ("Hong Kong", 22.3193, 114.1694, 0.9),
    ("Taipei, Taiwan", 25.033, 121.5654, 0.9),
    ("Seoul, South Korea", 37.5665, 126.978, 0.9),
    ("Busan, South Korea", 35.1796, 129.0756, 0.9),
    ("Tokyo, Japan", 35.6762, 139.6503, 0.9),
    ("Osaka, Japan", 34.6937, 135.5023, 0.9),
    ("Kyoto, Japan", 35.0116, 135.7681, 0.9),
    ("Sapporo, Japan", 43.0618, 141.3545, 0.9),
    ("Fukuoka, Japan", 33.5904, 130.4017, 0.9),
    ("Ulaanbaatar, Mongolia", 47.8864, 106.9057, 0.9),
    ("Almaty, Kazakhstan", 43.222, 76.8512, 0.9),
    ("Tashkent, Uzbekistan", 41.2995, 69.2401, 0.9),
    ("Sydney, Australia", -33.8688, 151.2093, 0.9),
    ("Melbourne, Australia", -37.8136, 144.9631, 0.9),
    ("Brisbane, Australia", -27.4698, 153.0251, 0.9),
    ("Perth, Australia", -31.9505, 115.8605, 0.9),
    ("Adelaide, Australia", -34.9285, 138.6007, 0.9),
    ("Canberra, Australia", -35.2809, 149.13, 0.9),
    ("Darwin, Australia", -12.4634, 130.8456, 0.9),
    ("Auckland, New Zealand", -36.8509, 174.7645, 0.9),
    ("Wellington, New Zealand", -41.2866, 174.7756, 0.9),
    ("Christchurch, New Zealand", -43.5321, 172.6362, 0.9),
    ("Suva, Fiji", -18.1416, 178.4419, 0.9),
    ("Apia, Samoa", -13.8506, -171.7513, 0.9),
]


def main():
    OUT.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# name<TAB>lat<TAB>lon<TAB>confidence"]
    for name, lat, lon, confidence in CITIES:
        lines.append(f"{name}\t{lat}\t{lon}\t{confidence}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(CITIES)} entries to {OUT}")


if __name__ == "__main__":
    main()
