#include "marketml/corpus.hpp"

// Embedded datasets: S&P/ASX 200 ("AUS") and S&P 500 ("USA") index OHLC
// quotes covering 2025-01-20 .. 2025-07-25, weekly and daily, as published
// by the exchange data feeds. Rows are embedded exactly as sourced, in
// source order; the daily AUS feed repeats a block of dates, which the
// loader's dedup pass collapses (first occurrence wins).

namespace marketml::detail {

const char* const kAusWeeklyCsv =
    "date,open,high,low,close\n"
    "2025-01-24,8383.2,8455.6,8356.7,8408.9\n"
    "2025-01-31,8508.1,8566.9,8353.9,8532.3\n"
    "2025-02-07,8502.1,8532.6,8417.0,8511.4\n"
    "2025-02-14,8546.9,8615.2,8469.7,8555.8\n"
    "2025-02-21,8331.5,8354.0,8216.3,8296.2\n"
    "2025-02-28,8248.9,8300.0,8172.4,8245.7\n"
    "2025-03-07,8173.7,8251.9,7733.5,8198.1\n"
    "2025-03-14,7953.8,7978.6,7740.1,7789.7\n"
    "2025-03-21,7916.2,7962.6,7833.2,7931.2\n"
    "2025-03-28,7966.9,8014.9,7843.0,7982.0\n"
    "2025-04-04,7834.8,8014.9,7169.2,7667.8\n"
    "2025-04-11,7670.5,7842.9,7524.5,7646.5\n"
    "2025-04-18,7757.9,7819.1,7743.6,7819.1\n"
    "2025-04-25,7932.4,7983.8,7745.1,7968.2\n"
    "2025-05-02,8114.3,8152.5,8109.7,8145.6\n"
    "2025-05-09,8186.5,8242.9,8152.4,8231.2\n"
    "2025-05-16,8245.0,8398.2,8233.5,8343.7\n"
    "2025-05-23,8342.0,8422.9,8284.0,8360.9\n"
    "2025-05-30,8405.4,8453.0,8380.3,8434.7\n"
    "2025-06-06,8433.8,8567.3,8401.1,8515.7\n"
    "2025-06-13,8560.4,8639.1,8517.3,8547.4\n"
    "2025-06-20,8526.5,8566.8,8421.1,8505.5\n"
    "2025-06-27,8551.1,8605.7,8514.2,8514.2\n"
    "2025-07-04,8548.1,8623.6,8536.7,8603.0\n"
    "2025-07-11,8602.7,8619.8,8531.4,8580.1\n"
    "2025-07-18,8676.9,8776.4,8544.7,8757.2\n"
    "2025-07-25,8674.9,8759.9,8648.4,8666.9\n"
;

const char* const kUsaWeeklyCsv =
    "date,open,high,low,close\n"
    "2025-01-20,6014.12,6128.18,6006.88,6101.24\n"
    "2025-01-27,5969.04,6120.91,5962.92,6040.53\n"
    "2025-02-03,5969.65,6101.28,5923.93,6025.99\n"
    "2025-02-10,6046.40,6127.47,6003.00,6114.63\n"
    "2025-02-17,6121.60,6147.43,6008.56,6013.13\n"
    "2025-02-24,6026.69,6043.65,5837.66,5954.50\n"
    "2025-03-03,5968.33,5986.09,5666.29,5770.20\n"
    "2025-03-10,5705.37,5705.37,5504.65,5638.94\n"
    "2025-03-17,5635.60,5715.33,5597.76,5667.56\n"
    "2025-03-24,5718.08,5786.95,5572.42,5580.94\n"
    "2025-03-31,5527.91,5695.31,5069.90,5074.08\n"
    "2025-04-07,4953.79,5481.34,4835.04,5363.36\n"
    "2025-04-14,5441.96,5459.46,5220.79,5282.70\n"
    "2025-04-21,5232.94,5528.11,5101.63,5525.21\n"
    "2025-04-28,5529.22,5700.70,5433.24,5686.67\n"
    "2025-05-05,5655.32,5720.10,5578.64,5659.91\n"
    "2025-05-12,5807.20,5958.62,5786.08,5958.38\n"
    "2025-05-19,5902.88,5968.61,5767.41,5802.82\n"
    "2025-05-26,5854.07,5943.13,5843.66,5911.69\n"
    "2025-06-02,5896.68,6016.87,5861.43,6000.36\n"
    "2025-06-09,6004.63,6059.40,5963.21,5976.97\n"
    "2025-06-16,6004.00,6050.83,5952.56,5967.84\n"
    "2025-06-23,5969.67,6187.68,5943.23,6173.07\n"
    "2025-06-30,6193.36,6284.65,6174.97,6279.35\n"
    "2025-07-07,6259.04,6290.22,6201.00,6259.75\n"
    "2025-07-14,6255.15,6315.61,6201.59,6296.79\n"
    "2025-07-21,6304.74,6395.82,6281.71,6388.64\n"
;

const char* const kAusDailyCsv =
    "date,open,high,low,close\n"
    "2025-07-25,8674.9,8683.8,8658.2,8666.9\n"
    "2025-07-24,8759.9,8759.9,8698.5,8709.4\n"
    "2025-07-23,8719.7,8748.6,8698.7,8737.2\n"
    "2025-07-22,8697.2,8714.6,8652.6,8677.2\n"
    "2025-07-21,8757.1,8757.1,8648.4,8668.2\n"
    "2025-07-18,8676.9,8776.4,8673.4,8757.2\n"
    "2025-07-17,8598.6,8641.3,8591.7,8639.0\n"
    "2025-07-16,8573.9,8577.8,8544.7,8561.8\n"
    "2025-07-15,8615.1,8632.8,8592.4,8630.3\n"
    "2025-07-14,8577.6,8593.6,8558.3,8570.4\n"
    "2025-07-11,8615.2,8619.8,8568.2,8580.1\n"
    "2025-07-10,8575.6,8610.8,8573.7,8589.2\n"
    "2025-07-09,8572.5,8572.9,8531.4,8538.6\n"
    "2025-07-08,8589.1,8610.0,8550.2,8590.7\n"
    "2025-07-07,8602.7,8617.0,8572.1,8589.3\n"
    "2025-07-04,8599.5,8616.8,8589.5,8603.0\n"
    "2025-07-03,8597.5,8623.6,8543.2,8595.8\n"
    "2025-07-02,8570.1,8613.0,8536.7,8597.7\n"
    "2025-07-01,8548.1,8576.0,8541.1,8541.1\n"
    "2025-06-30,8520.1,8576.7,8520.1,8542.3\n"
    "2025-06-27,8551.1,8605.7,8514.2,8514.2\n"
    "2025-06-26,8542.5,8560.4,8533.0,8550.8\n"
    "2025-06-25,8564.7,8577.3,8547.2,8559.2\n"
    "2025-06-24,8530.1,8574.0,8530.1,8555.5\n"
    "2025-06-23,8474.9,8480.3,8421.1,8474.9\n"
    "2025-06-20,8526.5,8526.5,8462.7,8505.5\n"
    "2025-06-19,8530.3,8540.3,8504.7,8523.7\n"
    "2025-06-18,8531.7,8553.0,8520.0,8531.2\n"
    "2025-06-17,8549.1,8566.8,8525.0,8541.3\n"
    "2025-06-16,8540.5,8579.1,8538.6,8548.4\n"
    "2025-06-13,8560.4,8577.4,8525.4,8547.4\n"
    "2025-06-12,8591.3,8617.8,8565.1,8565.1\n"
    "2025-06-11,8600.0,8639.1,8592.1,8592.1\n"
    "2025-06-10,8522.4,8592.0,8517.3,8587.2\n"
    "2025-06-06,8543.2,8555.6,8515.7,8515.7\n"
    "2025-06-05,8540.6,8567.3,8526.9,8538.9\n"
    "2025-06-04,8469.6,8546.5,8469.6,8541.8\n"
    "2025-06-03,8419.8,8479.5,8417.9,8466.7\n"
    "2025-06-02,8433.8,8435.5,8401.1,8414.1\n"
    "2025-05-30,8405.4,8439.8,8380.3,8434.7\n"
    "2025-05-29,8400.1,8427.3,8392.1,8409.8\n"
    "2025-05-28,8405.7,8453.0,8392.4,8396.9\n"
    "2025-05-27,8360.9,8407.6,8355.9,8407.6\n"
    "2025-05-26,8360.7,8369.3,8345.5,8361.0\n"
    "2025-05-23,8342.0,8380.6,8339.6,8360.9\n"
    "2025-05-22,8379.5,8379.5,8311.4,8348.7\n"
    "2025-05-21,8352.4,8422.9,8349.5,8386.8\n"
    "2025-05-20,8304.4,8364.5,8302.0,8343.3\n"
    "2025-05-19,8337.8,8344.8,8284.0,8295.1\n"
    "2025-05-16,8310.4,8398.2,8310.4,8343.7\n"
    "2025-05-15,8284.4,8303.1,8257.4,8297.5\n"
    "2025-05-14,8265.6,8279.6,8247.0,8279.6\n"
    "2025-05-13,8248.4,8314.0,8247.8,8269.0\n"
    "2025-05-12,8245.0,8279.3,8233.5,8233.5\n"
    "2025-05-09,8186.5,8242.9,8183.3,8231.2\n"
    "2025-05-08,8164.2,8211.2,8154.8,8191.7\n"
    "2025-05-07,8159.2,8191.4,8152.4,8178.3\n"
    "2025-05-06,8157.7,8168.9,8138.4,8151.4\n"
    "2025-05-05,8239.9,8240.5,8157.7,8157.8\n"
    "2025-05-02,8142.3,8239.6,8129.8,8238.0\n"
    "2025-05-01,8114.3,8152.5,8109.7,8145.6\n"
    "2025-04-30,8069.1,8126.2,8069.1,8126.2\n"
    "2025-04-29,7998.1,8076.7,7998.1,8070.6\n"
    "2025-04-28,7973.6,8051.8,7970.5,7997.1\n"
    "2025-04-24,7932.4,7983.8,7932.4,7968.2\n"
    "2025-04-23,7853.9,7961.8,7853.9,7920.5\n"
    "2025-04-22,7812.6,7822.4,7745.1,7816.7\n"
    "2025-04-28,7973.6,8051.8,7970.5,7997.1\n"
    "2025-04-24,7932.4,7983.8,7932.4,7968.2\n"
    "2025-04-23,7853.9,7961.8,7853.9,7920.5\n"
    "2025-04-22,7812.6,7822.4,7745.1,7816.7\n"
    "2025-04-17,7757.9,7819.1,7757.4,7819.1\n"
    "2025-04-16,7756.0,7791.4,7747.5,7758.9\n"
    "2025-04-15,7752.7,7798.7,7743.6,7761.7\n"
    "2025-04-14,7701.4,7764.1,7692.7,7748.6\n"
    "2025-04-11,7670.5,7670.5,7524.5,7646.5\n"
    "2025-04-10,7474.0,7842.9,7474.0,7709.6\n"
    "2025-04-09,7472.4,7474.0,7349.0,7375.0\n"
    "2025-04-08,7357.8,7510.0,7355.7,7510.0\n"
    "2025-04-07,7562.1,7562.1,7169.2,7343.3\n"
    "2025-04-04,7834.8,7834.8,7664.2,7667.8\n"
    "2025-04-03,7902.7,7903.3,7768.0,7859.7\n"
    "2025-04-02,7928.5,7978.4,7928.2,7934.5\n"
    "2025-04-01,7859.4,7925.2,7859.4,7925.2\n"
    "2025-03-31,7957.2,7957.2,7843.0,7843.4\n"
    "2025-03-28,7966.9,8001.0,7941.5,7982.0\n"
    "2025-03-27,7989.4,7989.4,7936.2,7969.0\n"
    "2025-03-26,7957.2,8014.9,7956.6,7999.0\n"
    "2025-03-25,7940.1,7994.0,7940.0,7942.5\n"
    "2025-03-24,7923.4,7939.2,7899.5,7936.9\n"
    "2025-03-21,7916.2,7962.6,7905.1,7931.2\n"
    "2025-03-20,7833.2,7931.2,7833.2,7918.9\n"
    "2025-03-19,7860.0,7868.5,7808.8,7828.3\n"
    "2025-03-18,7856.5,7922.9,7850.0,7860.4\n"
    "2025-03-17,7792.3,7858.5,7792.3,7854.1\n"
    "2025-03-14,7754.6,7795.3,7740.1,7789.7\n"
    "2025-03-13,7783.3,7821.1,7746.4,7749.1\n"
    "2025-03-12,7878.5,7878.5,7733.5,7786.2\n"
    "2025-03-11,7958.5,7958.5,7818.3,7890.1\n"
    "2025-03-10,7953.8,7978.6,7948.1,7962.3\n"
    "2025-03-07,8091.0,8092.5,7946.4,7948.2\n"
    "2025-03-06,8179.7,8179.7,8076.4,8094.7\n"
    "2025-03-05,8192.9,8192.9,8096.0,8141.1\n"
    "2025-03-04,8230.2,8231.1,8150.2,8198.1\n"
    "2025-03-03,8173.7,8251.9,8173.7,8245.7\n"
    "2025-02-28,8248.9,8248.9,8155.5,8172.4\n"
    "2025-02-27,8245.8,8300.0,8243.0,8268.2\n"
    "2025-02-26,8251.2,8251.2,8210.1,8240.7\n"
    "2025-02-25,8296.3,8296.3,8227.6,8251.9\n"
    "2025-02-24,8279.5,8310.0,8216.3,8308.2\n"
    "2025-02-21,8331.5,8354.0,8289.7,8296.2\n"
    "2025-02-20,8402.2,8402.2,8287.8,8322.8\n"
    "2025-02-19,8482.0,8482.0,8389.4,8419.2\n"
    "2025-02-18,8540.6,8544.7,8468.7,8481.0\n"
    "2025-02-17,8555.1,8555.1,8480.2,8537.1\n"
    "2025-02-14,8546.9,8615.2,8546.9,8555.8\n"
    "2025-02-13,8548.6,8575.2,8534.6,8540.0\n"
    "2025-02-12,8484.2,8535.3,8469.7,8535.3\n"
    "2025-02-11,8485.8,8515.3,8480.6,8484.0\n"
    "2025-02-10,8502.1,8502.1,8445.3,8482.8\n"
    "2025-02-07,8519.6,8532.6,8498.7,8511.4\n"
    "2025-02-06,8417.0,8523.2,8417.0,8520.7\n"
    "2025-02-05,8384.3,8441.2,8384.3,8416.9\n"
    "2025-02-04,8390.8,8446.8,8374.0,8374.0\n"
    "2025-02-03,8508.1,8508.1,8353.9,8379.4\n"
    "2025-01-31,8503.1,8566.9,8502.5,8532.3\n"
    "2025-01-30,8448.2,8515.7,8444.1,8493.7\n"
    "2025-01-29,8401.4,8481.6,8396.4,8447.0\n"
    "2025-01-28,8415.3,8427.1,8386.5,8399.1\n"
    "2025-01-24,8383.2,8421.1,8383.2,8408.9\n"
    "2025-01-23,8421.1,8421.1,8366.0,8378.7\n"
    "2025-01-22,8396.5,8455.6,8396.3,8429.8\n"
    "2025-01-21,8358.1,8453.3,8356.7,8402.4\n"
    "2025-01-20,8318.6,8356.4,8317.5,8347.4\n"
;

const char* const kUsaDailyCsv =
    "date,open,high,low,close\n"
    "2025-07-25,6370.0,6395.8,6368.5,6388.6\n"
    "2025-07-24,6368.6,6381.3,6360.6,6363.4\n"
    "2025-07-23,6326.9,6360.6,6317.5,6358.9\n"
    "2025-07-22,6306.6,6316.1,6281.7,6309.6\n"
    "2025-07-21,6304.7,6336.1,6303.8,6305.6\n"
    "2025-07-18,6313.0,6315.6,6285.3,6296.8\n"
    "2025-07-17,6263.4,6304.7,6262.3,6297.4\n"
    "2025-07-16,6254.5,6268.1,6201.6,6263.7\n"
    "2025-07-15,6295.3,6302.0,6241.7,6243.8\n"
    "2025-07-14,6255.2,6273.3,6239.2,6268.6\n"
    "2025-07-11,6255.7,6269.4,6237.6,6259.8\n"
    "2025-07-10,6266.8,6290.2,6251.4,6280.5\n"
    "2025-07-09,6243.3,6269.2,6231.4,6263.3\n"
    "2025-07-08,6234.0,6242.7,6217.8,6225.5\n"
    "2025-07-07,6259.0,6262.1,6201.0,6230.0\n"
    "2025-07-03,6246.5,6284.6,6246.5,6279.4\n"
    "2025-07-02,6193.9,6227.6,6188.3,6227.4\n"
    "2025-07-01,6187.2,6210.8,6178.0,6198.0\n"
    "2025-06-30,6193.4,6215.1,6175.0,6205.0\n"
    "2025-06-27,6150.7,6187.7,6132.4,6173.1\n"
    "2025-06-26,6112.1,6146.5,6107.3,6141.0\n"
    "2025-06-25,6104.2,6108.5,6080.1,6092.2\n"
    "2025-06-24,6061.2,6101.8,6059.2,6092.2\n"
    "2025-06-23,5969.7,6028.8,5943.2,6025.2\n"
    "2025-06-20,5999.7,6018.2,5952.6,5967.8\n"
    "2025-06-18,5987.9,6018.2,5971.9,5980.9\n"
    "2025-06-17,6012.2,6023.2,5974.8,5982.7\n"
    "2025-06-16,6004.0,6050.8,6004.0,6033.1\n"
    "2025-06-13,6000.6,6026.2,5963.2,5977.0\n"
    "2025-06-12,6009.9,6045.4,6003.9,6045.3\n"
    "2025-06-11,6049.4,6059.4,6002.3,6022.2\n"
    "2025-06-10,6009.9,6043.0,6000.3,6038.8\n"
    "2025-06-09,6004.6,6021.3,5994.2,6005.9\n"
    "2025-06-06,5987.1,6016.9,5978.6,6000.4\n"
    "2025-06-05,5985.7,5999.7,5921.2,5939.3\n"
    "2025-06-04,5978.9,5990.5,5966.1,5970.8\n"
    "2025-06-03,5938.6,5981.4,5929.0,5970.4\n"
    "2025-06-02,5896.7,5937.4,5861.4,5935.9\n"
    "2025-05-30,5903.7,5922.1,5843.7,5911.7\n"
    "2025-05-29,5940.0,5943.1,5873.8,5912.2\n"
    "2025-05-28,5925.5,5939.9,5881.9,5888.6\n"
    "2025-05-27,5854.1,5924.3,5854.1,5921.5\n"
    "2025-05-23,5781.9,5829.5,5767.4,5802.8\n"
    "2025-05-22,5841.3,5878.1,5825.8,5842.0\n"
    "2025-05-21,5910.2,5938.4,5830.9,5844.6\n"
    "2025-05-20,5944.7,5953.1,5909.3,5940.5\n"
    "2025-05-19,5902.9,5968.6,5895.7,5963.6\n"
    "2025-05-16,5929.1,5958.6,5907.4,5958.4\n"
    "2025-05-15,5869.8,5924.2,5865.2,5916.9\n"
    "2025-05-14,5896.7,5906.6,5872.1,5892.6\n"
    "2025-05-13,5854.2,5906.6,5845.0,5886.6\n"
    "2025-05-12,5807.2,5845.4,5786.1,5844.2\n"
    "2025-05-09,5679.6,5691.7,5644.2,5659.9\n"
    "2025-05-08,5663.6,5720.1,5635.4,5663.9\n"
    "2025-05-07,5614.2,5654.7,5578.6,5631.3\n"
    "2025-05-06,5605.9,5649.6,5586.0,5606.9\n"
    "2025-05-05,5655.3,5683.4,5634.5,5650.4\n"
    "2025-05-02,5645.9,5700.7,5642.3,5686.7\n"
    "2025-05-01,5625.1,5658.9,5597.4,5604.1\n"
    "2025-04-30,5499.4,5581.8,5433.2,5569.1\n"
    "2025-04-29,5508.9,5572.0,5505.7,5560.8\n"
    "2025-04-28,5529.2,5553.7,5468.6,5528.8\n"
    "2025-04-25,5489.7,5528.1,5455.9,5525.2\n"
    "2025-04-24,5381.4,5489.4,5372.0,5484.8\n"
    "2025-04-23,5395.9,5469.7,5356.2,5375.9\n"
    "2025-04-22,5207.7,5309.6,5207.7,5287.8\n"
    "2025-04-21,5232.9,5232.9,5101.6,5158.2\n"
    "2025-04-17,5305.4,5328.3,5255.6,5282.7\n"
    "2025-04-16,5335.8,5367.2,5220.8,5275.7\n"
    "2025-04-15,5412.0,5450.4,5386.4,5396.6\n"
    "2025-04-14,5442.0,5459.5,5358.0,5406.0\n"
    "2025-04-11,5255.6,5381.5,5220.8,5363.4\n"
    "2025-04-10,5353.2,5353.2,5115.3,5268.0\n"
    "2025-04-09,4965.3,5481.3,4948.4,5456.9\n"
    "2025-04-08,5193.6,5267.5,4910.4,4982.8\n"
    "2025-04-07,4953.8,5246.6,4835.0,5062.2\n"
    "2025-04-04,5292.1,5292.1,5069.9,5074.1\n"
    "2025-04-03,5492.7,5499.5,5390.8,5396.5\n"
    "2025-04-02,5580.8,5695.3,5571.5,5671.0\n"
    "2025-04-01,5597.5,5650.6,5558.5,5633.1\n"
    "2025-03-31,5527.9,5627.6,5488.7,5611.8\n"
    "2025-03-28,5679.2,5685.9,5572.4,5580.9\n"
    "2025-03-27,5695.6,5732.3,5670.9,5693.3\n"
    "2025-03-26,5771.7,5783.6,5694.4,5712.2\n"
    "2025-03-25,5776.0,5787.0,5760.4,5776.6\n"
    "2025-03-24,5718.1,5775.1,5718.1,5767.6\n"
    "2025-03-21,5630.7,5670.8,5603.1,5667.6\n"
    "2025-03-20,5646.9,5711.2,5632.3,5662.9\n"
    "2025-03-19,5632.4,5715.3,5622.2,5675.3\n"
    "2025-03-18,5654.5,5654.5,5597.8,5614.7\n"
    "2025-03-17,5635.6,5703.5,5631.1,5675.1\n"
    "2025-03-14,5563.8,5645.3,5563.8,5638.9\n"
    "2025-03-13,5594.4,5597.8,5504.6,5521.5\n"
    "2025-03-12,5624.8,5642.2,5546.1,5599.3\n"
    "2025-03-11,5603.6,5636.3,5528.4,5572.1\n"
    "2025-03-10,5705.4,5705.4,5564.0,5614.6\n"
    "2025-03-07,5726.0,5783.0,5666.3,5770.2\n"
    "2025-03-06,5785.9,5812.1,5711.6,5738.5\n"
    "2025-03-05,5781.4,5860.6,5742.4,5842.6\n"
    "2025-03-04,5812.0,5865.1,5732.6,5778.2\n"
    "2025-03-03,5968.3,5986.1,5810.9,5849.7\n"
    "2025-02-28,5856.7,5959.4,5837.7,5954.5\n"
    "2025-02-27,5981.9,5993.7,5858.8,5861.6\n"
    "2025-02-26,5970.9,6009.8,5932.7,5956.1\n"
    "2025-02-25,5982.7,5992.6,5908.5,5955.2\n"
    "2025-02-24,6026.7,6043.6,5977.8,5983.2\n"
    "2025-02-21,6114.1,6114.8,6008.6,6013.1\n"
    "2025-02-20,6134.5,6134.5,6084.6,6117.5\n"
    "2025-02-19,6117.8,6147.4,6111.2,6144.2\n"
    "2025-02-18,6121.6,6129.6,6099.5,6129.6\n"
    "2025-02-14,6115.5,6127.5,6107.6,6114.6\n"
    "2025-02-13,6060.6,6116.9,6051.0,6115.1\n"
    "2025-02-12,6025.1,6063.0,6003.0,6052.0\n"
    "2025-02-11,6049.3,6076.3,6042.3,6068.5\n"
    "2025-02-10,6046.4,6073.4,6044.8,6066.4\n"
    "2025-02-07,6083.1,6101.3,6020.0,6026.0\n"
    "2025-02-06,6072.2,6084.0,6046.8,6083.6\n"
    "2025-02-05,6020.4,6062.9,6007.1,6061.5\n"
    "2025-02-04,5998.1,6042.5,5990.9,6037.9\n"
    "2025-02-03,5969.6,6022.1,5923.9,5994.6\n"
    "2025-01-31,6096.8,6120.9,6030.9,6040.5\n"
    "2025-01-30,6050.8,6086.6,6027.5,6071.2\n"
    "2025-01-29,6057.7,6062.8,6013.0,6039.3\n"
    "2025-01-28,6027.0,6074.5,5994.6,6067.7\n"
    "2025-01-27,5969.0,6017.2,5962.9,6012.3\n"
    "2025-01-24,6121.4,6128.2,6088.7,6101.2\n"
    "2025-01-23,6076.3,6118.7,6074.7,6118.7\n"
    "2025-01-22,6081.4,6100.8,6076.1,6086.4\n"
    "2025-01-21,6014.1,6051.5,6006.9,6049.2\n"
;

}  // namespace marketml::detail
