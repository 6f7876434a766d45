// @generated by scripts/gen_tw1_table.py; do not edit by hand.
//
// Tracy-Widom (beta = 1) distribution on a uniform grid, from the Fredholm
// determinant of the Airy-type kernel (96-node Gauss-Legendre on [0, 24]).
// Columns: x, F1(x), 1 - F1(x).

pub(crate) const TW1_X_MIN: f64 = -8.0;
pub(crate) const TW1_X_STEP: f64 = 0.05;

pub(crate) static TW1_TABLE: [(f64, f64, f64); 321] = [
    (-8.00, 1.8091684595678261e-12, 9.9999999999819078e-01),
    (-7.95, 2.8300444116578458e-12, 9.9999999999716993e-01),
    (-7.90, 4.4048545432001262e-12, 9.9999999999559519e-01),
    (-7.85, 6.8217025963049795e-12, 9.9999999999317835e-01),
    (-7.80, 1.0511872370965853e-11, 9.9999999998948808e-01),
    (-7.75, 1.6117574125322222e-11, 9.9999999998388245e-01),
    (-7.70, 2.4590075233653553e-11, 9.9999999997540989e-01),
    (-7.65, 3.7331068707690888e-11, 9.9999999996266897e-01),
    (-7.60, 5.6395205237322362e-11, 9.9999999994360478e-01),
    (-7.55, 8.4778700340385820e-11, 9.9999999991522126e-01),
    (-7.50, 1.2682831396150241e-10, 9.9999999987317167e-01),
    (-7.45, 1.8881785946635069e-10, 9.9999999981118215e-01),
    (-7.40, 2.7975639059143587e-10, 9.9999999972024356e-01),
    (-7.35, 4.1251522325113377e-10, 9.9999999958748476e-01),
    (-7.30, 6.0539106462872257e-10, 9.9999999939460893e-01),
    (-7.25, 8.8426251284070895e-10, 9.9999999911573745e-01),
    (-7.20, 1.2855494692748816e-09, 9.9999999871445056e-01),
    (-7.15, 1.8602528423641737e-09, 9.9999999813974716e-01),
    (-7.10, 2.6794399562176300e-09, 9.9999999732056000e-01),
    (-7.05, 3.8416538425115937e-09, 9.9999999615834612e-01),
    (-7.00, 5.4828690718774670e-09, 9.9999999451713095e-01),
    (-6.95, 7.7897993241023816e-09, 9.9999999221020064e-01),
    (-6.90, 1.1017592943495467e-08, 9.9999998898240705e-01),
    (-6.85, 1.5513241237635903e-08, 9.9999998448675875e-01),
    (-6.80, 2.1746384113715177e-08, 9.9999997825361586e-01),
    (-6.75, 3.0349641382394809e-08, 9.9999996965035864e-01),
    (-6.70, 4.2171144246567698e-08, 9.9999995782885576e-01),
    (-6.65, 5.8342607082267353e-08, 9.9999994165739292e-01),
    (-6.60, 8.0367084765642618e-08, 9.9999991963291524e-01),
    (-6.55, 1.1023153170855713e-07, 9.9999988976846832e-01),
    (-6.50, 1.5055043683118811e-07, 9.9999984944956322e-01),
    (-6.45, 2.0474818091516520e-07, 9.9999979525181903e-01),
    (-6.40, 2.7728938153553732e-07, 9.9999972271061843e-01),
    (-6.35, 3.7396837731016128e-07, 9.9999962603162273e-01),
    (-6.30, 5.0227119144037671e-07, 9.9999949772880858e-01),
    (-6.25, 6.7182583378749233e-07, 9.9999932817416626e-01),
    (-6.20, 8.9495966138214516e-07, 9.9999910504033862e-01),
    (-6.15, 1.1873857657145125e-06, 9.9999881261423429e-01),
    (-6.10, 1.5690439747703642e-06, 9.9999843095602525e-01),
    (-6.05, 2.0651260825334790e-06, 9.9999793487391742e-01),
    (-6.00, 2.7073193284292489e-06, 9.9999729268067161e-01),
    (-5.95, 3.5353069283731214e-06, 9.9999646469307157e-01),
    (-5.90, 4.5985695885249526e-06, 9.9999540143041143e-01),
    (-5.85, 5.9585373408304702e-06, 9.9999404146265913e-01),
    (-5.80, 7.6911466791412567e-06, 9.9999230885332091e-01),
    (-5.75, 9.8898637238557597e-06, 9.9999011013627614e-01),
    (-5.70, 1.2669239913757013e-05, 9.9998733076008628e-01),
    (-5.65, 1.6169072334107475e-05, 9.9998383092766585e-01),
    (-5.60, 2.0559246096358777e-05, 9.9997944075390366e-01),
    (-5.55, 2.6045340950947050e-05, 9.9997395465904904e-01),
    (-5.50, 3.2875088341686884e-05, 9.9996712491165829e-01),
    (-5.45, 4.1345768104064380e-05, 9.9995865423189589e-01),
    (-5.40, 5.1812635703437053e-05, 9.9994818736429658e-01),
    (-5.35, 6.4698471020085046e-05, 9.9993530152897991e-01),
    (-5.30, 8.0504337838931418e-05, 9.9991949566216110e-01),
    (-5.25, 9.9821639159939702e-05, 9.9990017836084011e-01),
    (-5.20, 1.2334554678915336e-04, 9.9987665445321083e-01),
    (-5.15, 1.5188987418542942e-04, 9.9984811012581454e-01),
    (-5.10, 1.8640344888737226e-04, 9.9981359655111268e-01),
    (-5.05, 2.2798802479381860e-04, 9.9977201197520615e-01),
    (-5.00, 2.7791775491760274e-04, 9.9972208224508241e-01),
    (-4.95, 3.3766022192653790e-04, 9.9966233977807351e-01),
    (-4.90, 4.0889899658633514e-04, 9.9959110100341364e-01),
    (-4.85, 4.9355766344096649e-04, 9.9950644233655905e-01),
    (-4.80, 5.9382521854854664e-04, 9.9940617478145144e-01),
    (-4.75, 7.1218270638213205e-04, 9.9928781729361782e-01),
    (-4.70, 8.5143092223125460e-04, 9.9914856907776872e-01),
    (-4.65, 1.0147189632935569e-03, 9.9898528103670647e-01),
    (-4.60, 1.2055733666848101e-03, 9.9879442663331519e-01),
    (-4.55, 1.4279275265282577e-03, 9.9857207247347179e-01),
    (-4.50, 1.6861510361402278e-03, 9.9831384896385977e-01),
    (-4.45, 1.9850785559411507e-03, 9.9801492144405890e-01),
    (-4.40, 2.3300377642890501e-03, 9.9766996223571092e-01),
    (-4.35, 2.7268759080646084e-03, 9.9727312409193536e-01),
    (-4.30, 3.1819844337547666e-03, 9.9681801556624527e-01),
    (-4.25, 3.7023211492598646e-03, 9.9629767885074016e-01),
    (-4.20, 4.2954293428319607e-03, 9.9570457065716800e-01),
    (-4.15, 4.9694532697006754e-03, 9.9503054673029934e-01),
    (-4.10, 5.7331494102229536e-03, 9.9426685058977704e-01),
    (-4.05, 6.5958929065151623e-03, 9.9340410709348481e-01),
    (-4.00, 7.5676785987970115e-03, 9.9243232140120297e-01),
    (-3.95, 8.6591161083060010e-03, 9.9134088389169395e-01),
    (-3.90, 9.8814184513529545e-03, 9.9011858154864707e-01),
    (-3.85, 1.1246383719028030e-02, 9.8875361628097191e-01),
    (-3.80, 1.2766369419101030e-02, 9.8723363058089897e-01),
    (-3.75, 1.4454259150534674e-02, 9.8554574084946533e-01),
    (-3.70, 1.6323421366139401e-02, 9.8367657863386060e-01),
    (-3.65, 1.8387660074161247e-02, 9.8161233992583874e-01),
    (-3.60, 2.0661157434052214e-02, 9.7933884256594783e-01),
    (-3.55, 2.3158408313669474e-02, 9.7684159168633056e-01),
    (-3.50, 2.5894146993018896e-02, 9.7410585300698105e-01),
    (-3.45, 2.8883266321520149e-02, 9.7111673367847984e-01),
    (-3.40, 3.2140729759472700e-02, 9.6785927024052731e-01),
    (-3.35, 3.5681476857657456e-02, 9.6431852314234257e-01),
    (-3.30, 3.9520322849617331e-02, 9.6047967715038263e-01),
    (-3.25, 4.3671853146591388e-02, 9.5632814685340861e-01),
    (-3.20, 4.8150313633153009e-02, 9.5184968636684697e-01),
    (-3.15, 5.2969497759924516e-02, 9.4703050224007546e-01),
    (-3.10, 5.8142631516273378e-02, 9.4185736848372659e-01),
    (-3.05, 6.3682257438631859e-02, 9.3631774256136813e-01),
    (-3.00, 6.9600118867369651e-02, 9.3039988113263039e-01),
    (-2.95, 7.5907045705458046e-02, 9.2409295429454197e-01),
    (-2.90, 8.2612842954489160e-02, 9.1738715704551088e-01),
    (-2.85, 8.9726183307094434e-02, 9.1027381669290552e-01),
    (-2.80, 9.7254505059023777e-02, 9.0274549494097622e-01),
    (-2.75, 1.0520391656917627e-01, 8.9479608343082373e-01),
    (-2.70, 1.1357910844181769e-01, 8.8642089155818227e-01),
    (-2.65, 1.2238327453314812e-01, 8.7761672546685188e-01),
    (-2.60, 1.3161804279492445e-01, 8.6838195720507561e-01),
    (-2.55, 1.4128341686284149e-01, 8.5871658313715848e-01),
    (-2.50, 1.5137772917814538e-01, 8.4862227082185460e-01),
    (-2.45, 1.6189760629976657e-01, 8.3810239370023343e-01),
    (-2.40, 1.7283794692303331e-01, 8.2716205307696666e-01),
    (-2.35, 1.8419191297234824e-01, 8.1580808702765173e-01),
    (-2.30, 1.9595093398132724e-01, 8.0404906601867276e-01),
    (-2.25, 2.0810472481749601e-01, 7.9189527518250402e-01),
    (-2.20, 2.2064131665220776e-01, 7.7935868334779224e-01),
    (-2.15, 2.3354710092240075e-01, 7.6645289907759928e-01),
    (-2.10, 2.4680688588171520e-01, 7.5319311411828482e-01),
    (-2.05, 2.6040396519647213e-01, 7.3959603480352787e-01),
    (-2.00, 2.7432019790921536e-01, 7.2567980209078464e-01),
    (-1.95, 2.8853609897082105e-01, 7.1146390102917889e-01),
    (-1.90, 3.0303093943319676e-01, 6.9696906056680319e-01),
    (-1.85, 3.1778285529964467e-01, 6.8221714470035533e-01),
    (-1.80, 3.3276896395020300e-01, 6.6723103604979694e-01),
    (-1.75, 3.4796548699538749e-01, 6.5203451300461257e-01),
    (-1.70, 3.6334787836427895e-01, 6.3665212163572105e-01),
    (-1.65, 3.7889095640196752e-01, 6.2110904359803254e-01),
    (-1.60, 3.9456903873692523e-01, 6.0543096126307472e-01),
    (-1.55, 4.1035607868046842e-01, 5.8964392131953158e-01),
    (-1.50, 4.2622580193757470e-01, 5.7377419806242536e-01),
    (-1.45, 4.4215184243998845e-01, 5.5784815756001160e-01),
    (-1.40, 4.5810787615776000e-01, 5.4189212384223995e-01),
    (-1.35, 4.7406775180294014e-01, 5.2593224819705986e-01),
    (-1.30, 4.9000561740764909e-01, 5.0999438259235086e-01),
    (-1.25, 5.0589604183676473e-01, 4.9410395816323527e-01),
    (-1.20, 5.2171413038144865e-01, 4.7828586961855135e-01),
    (-1.15, 5.3743563367210057e-01, 4.6256436632789943e-01),
    (-1.10, 5.5303704924646546e-01, 4.4696295075353459e-01),
    (-1.05, 5.6849571520900966e-01, 4.3150428479099034e-01),
    (-1.00, 5.8378989551972815e-01, 4.1621010448027185e-01),
    (-0.95, 5.9889885655283981e-01, 4.0110114344716014e-01),
    (-0.90, 6.1380293466698055e-01, 3.8619706533301945e-01),
    (-0.85, 6.2848359462723002e-01, 3.7151640537276998e-01),
    (-0.80, 6.4292347881447554e-01, 3.5707652118552441e-01),
    (-0.75, 6.5710644724822631e-01, 3.4289355275177369e-01),
    (-0.70, 6.7101760853409853e-01, 3.2898239146590141e-01),
    (-0.65, 6.8464334192613241e-01, 3.1535665807386759e-01),
    (-0.60, 6.9797131076622665e-01, 3.0202868923377335e-01),
    (-0.55, 7.1099046762783602e-01, 2.8900953237216404e-01),
    (-0.50, 7.2369105154837776e-01, 2.7630894845162224e-01),
    (-0.45, 7.3606457778431555e-01, 2.6393542221568445e-01),
    (-0.40, 7.4810382056459934e-01, 2.5189617943540060e-01),
    (-0.35, 7.5980278935205003e-01, 2.4019721064794991e-01),
    (-0.30, 7.7115669914859508e-01, 2.2884330085140492e-01),
    (-0.25, 7.8216193539917767e-01, 2.1783806460082236e-01),
    (-0.20, 7.9281601406105073e-01, 2.0718398593894924e-01),
    (-0.15, 8.0311753741039316e-01, 1.9688246258960682e-01),
    (-0.10, 8.1306614615722794e-01, 1.8693385384277206e-01),
    (-0.05, 8.2266246843295010e-01, 1.7733753156704990e-01),
    (0.00, 8.3190806620294910e-01, 1.6809193379705090e-01),
    (0.05, 8.4080537964035906e-01, 1.5919462035964088e-01),
    (0.10, 8.4935766997647932e-01, 1.5064233002352068e-01),
    (0.15, 8.5756896131942995e-01, 1.4243103868057005e-01),
    (0.20, 8.6544398190570060e-01, 1.3455601809429943e-01),
    (0.25, 8.7298810521999159e-01, 1.2701189478000843e-01),
    (0.30, 8.8020729138761977e-01, 1.1979270861238023e-01),
    (0.35, 8.8710802921129872e-01, 1.1289197078870133e-01),
    (0.40, 8.9369727919078434e-01, 1.0630272080921564e-01),
    (0.45, 8.9998241783009425e-01, 1.0001758216990574e-01),
    (0.50, 9.0597118350323191e-01, 9.4028816496768100e-02),
    (0.55, 9.1167162411587566e-01, 8.8328375884124372e-02),
    (0.60, 9.1709204676769085e-01, 8.2907953232309109e-02),
    (0.65, 9.2224096958807489e-01, 7.7759030411925140e-02),
    (0.70, 9.2712707588745868e-01, 7.2872924112541329e-02),
    (0.75, 9.3175917073703851e-01, 6.8240829262961517e-02),
    (0.80, 9.3614614006209151e-01, 6.3853859937908444e-02),
    (0.85, 9.4029691230803680e-01, 5.9703087691963232e-02),
    (0.90, 9.4422042271420958e-01, 5.5779577285790381e-02),
    (0.95, 9.4792558020799256e-01, 5.2074419792007422e-02),
    (1.00, 9.5142123691154956e-01, 4.8578763088450425e-02),
    (1.05, 9.5471616023494155e-01, 4.5283839765058440e-02),
    (1.10, 9.5781900751285709e-01, 4.2180992487142951e-02),
    (1.15, 9.6073830312755726e-01, 3.9261696872442693e-02),
    (1.20, 9.6348241804783730e-01, 3.6517581952162731e-02),
    (1.25, 9.6605955170281399e-01, 3.3940448297186017e-02),
    (1.30, 9.6847771610007038e-01, 3.1522283899929608e-02),
    (1.35, 9.7074472209003249e-01, 2.9255277909967511e-02),
    (1.40, 9.7286816767235496e-01, 2.7131832327645045e-02),
    (1.45, 9.7485542823541149e-01, 2.5144571764588494e-02),
    (1.50, 9.7671364861665977e-01, 2.3286351383340190e-02),
    (1.55, 9.7844973686953951e-01, 2.1550263130460524e-02),
    (1.60, 9.8007035962157374e-01, 1.9929640378426223e-02),
    (1.65, 9.8158193890837842e-01, 1.8418061091621543e-02),
    (1.70, 9.8299065036920852e-01, 1.7009349630791530e-02),
    (1.75, 9.8430242269141122e-01, 1.5697577308588780e-02),
    (1.80, 9.8552293819359593e-01, 1.4477061806404030e-02),
    (1.85, 9.8665763444037069e-01, 1.3342365559629255e-02),
    (1.90, 9.8771170678506126e-01, 1.2288293214938755e-02),
    (1.95, 9.8869011174081445e-01, 1.1309888259185516e-02),
    (2.00, 9.8959757108482671e-01, 1.0402428915173321e-02),
    (2.05, 9.9043857660504597e-01, 9.5614233949540724e-03),
    (2.10, 9.9121739540351350e-01, 8.7826045964865210e-03),
    (2.15, 9.9193807567546244e-01, 8.0619243245375199e-03),
    (2.20, 9.9260445288833032e-01, 7.3955471116696550e-03),
    (2.25, 9.9322015628990989e-01, 6.7798437100900647e-03),
    (2.30, 9.9378861567992027e-01, 6.2113843200797166e-03),
    (2.35, 9.9431306838427613e-01, 5.6869316157238062e-03),
    (2.40, 9.9479656637624669e-01, 5.2034336237533176e-03),
    (2.45, 9.9524198349348025e-01, 4.7580165065197015e-03),
    (2.50, 9.9565202270451780e-01, 4.3479772954822327e-03),
    (2.55, 9.9602922338288735e-01, 3.9707766171126081e-03),
    (2.60, 9.9637596855116706e-01, 3.6240314488329311e-03),
    (2.65, 9.9669449206148797e-01, 3.3055079385120225e-03),
    (2.70, 9.9698688568283567e-01, 3.0131143171643650e-03),
    (2.75, 9.9725510606916901e-01, 2.7448939308310325e-03),
    (2.80, 9.9750098158582257e-01, 2.4990184141774497e-03),
    (2.85, 9.9772621897487801e-01, 2.2737810251220406e-03),
    (2.90, 9.9793240984318987e-01, 2.0675901568101437e-03),
    (2.95, 9.9812103695953069e-01, 1.8789630404692874e-03),
    (3.00, 9.9829348034988052e-01, 1.7065196501194679e-03),
    (3.05, 9.9845102318223922e-01, 1.5489768177607644e-03),
    (3.10, 9.9859485743448539e-01, 1.4051425655146131e-03),
    (3.15, 9.9872608934075424e-01, 1.2739106592457132e-03),
    (3.20, 9.9884574461356812e-01, 1.1542553864319317e-03),
    (3.25, 9.9895477344052996e-01, 1.0452265594700814e-03),
    (3.30, 9.9905405525580315e-01, 9.4594474419688792e-04),
    (3.35, 9.9914440328784204e-01, 8.5559671215790960e-04),
    (3.40, 9.9922656888593819e-01, 7.7343111406184383e-04),
    (3.45, 9.9930124562909528e-01, 6.9875437090473065e-04),
    (3.50, 9.9936907322157242e-01, 6.3092677842759883e-04),
    (3.55, 9.9943064118012748e-01, 5.6935881987256215e-04),
    (3.60, 9.9948649231858289e-01, 5.1350768141710554e-04),
    (3.65, 9.9953712603581557e-01, 4.6287396418442445e-04),
    (3.70, 9.9958300141365908e-01, 4.1699858634094392e-04),
    (3.75, 9.9962454013150859e-01, 3.7545986849142838e-04),
    (3.80, 9.9966212920464059e-01, 3.3787079535936294e-04),
    (3.85, 9.9969612355341209e-01, 3.0387644658786593e-04),
    (3.90, 9.9972684841059356e-01, 2.7315158940648842e-04),
    (3.95, 9.9975460157412466e-01, 2.4539842587532440e-04),
    (4.00, 9.9977965551256698e-01, 2.2034448743300810e-04),
    (4.05, 9.9980225933046651e-01, 1.9774066953343354e-04),
    (4.10, 9.9982264060074821e-01, 1.7735939925179512e-04),
    (4.15, 9.9984100707113166e-01, 1.5899292886832592e-04),
    (4.20, 9.9985754825140660e-01, 1.4245174859333539e-04),
    (4.25, 9.9987243688822480e-01, 1.2756311177515822e-04),
    (4.30, 9.9988583033387057e-01, 1.1416966612946848e-04),
    (4.35, 9.9989787181525958e-01, 1.0212818474042175e-04),
    (4.40, 9.9990869160919216e-01, 9.1308390807856211e-05),
    (4.45, 9.9991840812965260e-01, 8.1591870347386621e-05),
    (4.50, 9.9992712893271107e-01, 7.2871067288967137e-05),
    (4.55, 9.9993495164433799e-01, 6.5048355661963888e-05),
    (4.60, 9.9994196481620101e-01, 5.8035183798938474e-05),
    (4.65, 9.9994824871426569e-01, 5.1751285734267654e-05),
    (4.70, 9.9995387604478414e-01, 4.6123955215887527e-05),
    (4.75, 9.9995891262201253e-01, 4.1087377987420370e-05),
    (4.80, 9.9996341798176747e-01, 3.6582018232547399e-05),
    (4.85, 9.9996744594469722e-01, 3.2554055302766741e-05),
    (4.90, 9.9997104513292723e-01, 2.8954867072747539e-05),
    (4.95, 9.9997425944351626e-01, 2.5740556483736029e-05),
    (5.00, 9.9997712848195563e-01, 2.2871518044321523e-05),
    (5.05, 9.9997968795874104e-01, 2.0312041258925368e-05),
    (5.10, 9.9998197005185263e-01, 1.8029948147352070e-05),
    (5.15, 9.9998400373779661e-01, 1.5996262203407424e-05),
    (5.20, 9.9998581509368312e-01, 1.4184906316857600e-05),
    (5.25, 9.9998742757264913e-01, 1.2572427350816402e-05),
    (5.30, 9.9998886225477390e-01, 1.1137745226038274e-05),
    (5.35, 9.9999013807548531e-01, 9.8619245146489384e-06),
    (5.40, 9.9999127203331128e-01, 8.7279666886844615e-06),
    (5.45, 9.9999227937869639e-01, 7.7206213036160099e-06),
    (5.50, 9.9999317378547603e-01, 6.8262145240087013e-06),
    (5.55, 9.9999396750648217e-01, 6.0324935178342016e-06),
    (5.60, 9.9999467151464205e-01, 5.3284853579862843e-06),
    (5.65, 9.9999529563082545e-01, 4.7043691745019733e-06),
    (5.70, 9.9999584863960078e-01, 4.1513603991585593e-06),
    (5.75, 9.9999633839396418e-01, 3.6616060357887340e-06),
    (5.80, 9.9999677191002490e-01, 3.2280899751304115e-06),
    (5.85, 9.9999715545254741e-01, 2.8445474526077252e-06),
    (5.90, 9.9999749461217857e-01, 2.5053878214216157e-06),
    (5.95, 9.9999779437511793e-01, 2.2056248820137333e-06),
    (6.00, 9.9999805918592732e-01, 1.9408140726463170e-06),
    (6.05, 9.9999829300411514e-01, 1.7069958848013051e-06),
    (6.10, 9.9999849935507834e-01, 1.5006449216249234e-06),
    (6.15, 9.9999868137593195e-01, 1.3186240679981073e-06),
    (6.20, 9.9999884185671273e-01, 1.1581432872629722e-06),
    (6.25, 9.9999898327739756e-01, 1.0167226024313312e-06),
    (6.30, 9.9999910784114088e-01, 8.9215885908506027e-07),
    (6.35, 9.9999921750409659e-01, 7.8249590338148298e-07),
    (6.40, 9.9999931400215814e-01, 6.8599784181876511e-07),
    (6.45, 9.9999939887492006e-01, 6.0112507990652523e-07),
    (6.50, 9.9999947348713514e-01, 5.2651286482308852e-07),
    (6.55, 9.9999953904791727e-01, 4.6095208271018460e-07),
    (6.60, 9.9999959662791538e-01, 4.0337208463541705e-07),
    (6.65, 9.9999964717466339e-01, 3.5282533660799409e-07),
    (6.70, 9.9999969152629142e-01, 3.0847370852061881e-07),
    (6.75, 9.9999973042376533e-01, 2.6957623465582416e-07),
    (6.80, 9.9999976452180539e-01, 2.3547819457524623e-07),
    (6.85, 9.9999979439862208e-01, 2.0560137793315461e-07),
    (6.90, 9.9999982056458980e-01, 1.7943541013960609e-07),
    (6.95, 9.9999984346997206e-01, 1.5653002795486408e-07),
    (7.00, 9.9999986351179482e-01, 1.3648820512778921e-07),
    (7.05, 9.9999988103996185e-01, 1.1896003819213569e-07),
    (7.10, 9.9999989636268838e-01, 1.0363731159444097e-07),
    (7.15, 9.9999990975133046e-01, 9.0248669526946760e-08),
    (7.20, 9.9999992144467076e-01, 7.8555329254210251e-08),
    (7.25, 9.9999993165272261e-01, 6.8347277422201239e-08),
    (7.30, 9.9999994056010311e-01, 5.9439896887678334e-08),
    (7.35, 9.9999994832902295e-01, 5.1670977062435053e-08),
    (7.40, 9.9999995510193429e-01, 4.4898065685527812e-08),
    (7.45, 9.9999996100387567e-01, 3.8996124366528468e-08),
    (7.50, 9.9999996614454578e-01, 3.3855454229536896e-08),
    (7.55, 9.9999997062013846e-01, 2.9379861572738031e-08),
    (7.60, 9.9999997451496336e-01, 2.5485036679713494e-08),
    (7.65, 9.9999997790287820e-01, 2.2097121811173610e-08),
    (7.70, 9.9999998084855302e-01, 1.9151447000960185e-08),
    (7.75, 9.9999998340858542e-01, 1.6591414606879727e-08),
    (7.80, 9.9999998563248438e-01, 1.4367515651424964e-08),
    (7.85, 9.9999998756353714e-01, 1.2436462853595732e-08),
    (7.90, 9.9999998923957312e-01, 1.0760426922495771e-08),
    (7.95, 9.9999999069363577e-01, 9.3063641758499155e-09),
    (8.00, 9.9999999195457512e-01, 8.0454248798702207e-09),
];
